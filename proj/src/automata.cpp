#include "raag/automata.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace raag {

bool WordAutomaton::is_final(int q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

void validate_automaton(const WordAutomaton& a,
                        const IndependenceAlphabet& alpha) {
  auto in_range = [&](int q) { return q >= 0 && q < a.states; };
  if (a.states <= 0 || !in_range(a.initial)) {
    throw InvalidInput("automaton needs at least one state and an initial state");
  }
  for (int f : a.finals) {
    if (!in_range(f)) {
      throw InvalidInput("final state out of range");
    }
  }
  for (const auto& t : a.transitions) {
    if (!in_range(t.from) || !in_range(t.to)) {
      throw InvalidInput("transition endpoint out of range");
    }
    for (const auto& x : t.label) {
      if (x.gen < 0 || x.gen >= static_cast<int>(alpha.size())) {
        throw InvalidInput("transition label letter out of range");
      }
    }
  }
}

namespace {

AcyclicityEvidence topological(const WordAutomaton& a, bool skip_loops) {
  AcyclicityEvidence ev;
  const int n = a.states;
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indegree(n, 0);
  for (const auto& t : a.transitions) {
    if (skip_loops && t.from == t.to) {
      continue;
    }
    succ[t.from].push_back(t.to);
    ++indegree[t.to];
  }
  // Smallest state first among the ready ones.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int q = 0; q < n; ++q) {
    if (indegree[q] == 0) {
      ready.push(q);
    }
  }
  while (!ready.empty()) {
    const int q = ready.top();
    ready.pop();
    ev.order.push_back(q);
    for (int r : succ[q]) {
      if (--indegree[r] == 0) {
        ready.push(r);
      }
    }
  }
  if (static_cast<int>(ev.order.size()) == n) {
    ev.ok = true;
    return ev;
  }
  // Walk backwards along remaining edges until a state repeats.
  std::vector<std::vector<int>> pred(n);
  for (const auto& t : a.transitions) {
    if (skip_loops && t.from == t.to) {
      continue;
    }
    if (indegree[t.to] > 0 && indegree[t.from] > 0) {
      pred[t.to].push_back(t.from);
    }
  }
  int q = 0;
  while (indegree[q] == 0) {
    ++q;
  }
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk;
  while (seen_at[q] < 0) {
    seen_at[q] = static_cast<int>(walk.size());
    walk.push_back(q);
    q = pred[q].front();
  }
  ev.cycle.assign(walk.begin() + seen_at[q], walk.end());
  std::reverse(ev.cycle.begin(), ev.cycle.end());
  ev.order.clear();
  ev.reason = "cycle";
  return ev;
}

}  // namespace

AcyclicityEvidence check_acyclic(const WordAutomaton& a) {
  for (const auto& t : a.transitions) {
    if (t.from == t.to) {
      AcyclicityEvidence ev;
      ev.cycle = {t.from};
      ev.reason = "self-loop";
      return ev;
    }
  }
  return topological(a, false);
}

AcyclicityEvidence check_acyclic_loop(const WordAutomaton& a) {
  std::vector<const GroupWord*> loop(a.states, nullptr);
  for (const auto& t : a.transitions) {
    if (t.from != t.to) {
      continue;
    }
    if (loop[t.from] != nullptr && *loop[t.from] != t.label) {
      AcyclicityEvidence ev;
      ev.cycle = {t.from};
      ev.reason = "two distinct loops at one state";
      return ev;
    }
    loop[t.from] = &t.label;
  }
  return topological(a, true);
}

GroupWord path_label(const WordAutomaton& a, const std::vector<int>& path) {
  GroupWord w;
  for (int t : path) {
    const auto& label = a.transitions.at(t).label;
    w.insert(w.end(), label.begin(), label.end());
  }
  return w;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

struct SearchNode {
  GroupWord word;
  int pred_state = -1;
  int pred_index = -1;
  int transition = -1;
};

constexpr long kUnreachable = std::numeric_limits<long>::min();

}  // namespace

MembershipResult membership_one(const WordAutomaton& a,
                                const IndependenceAlphabet& alpha,
                                const DecompositionTree* tree,
                                const MembershipOptions& options) {
  validate_automaton(a, alpha);
  const AcyclicityEvidence ev = check_acyclic(a);
  if (!ev.ok) {
    throw InvalidInput("membership_one requires an acyclic automaton");
  }
  const int n = a.states;
  std::vector<std::vector<int>> out(n);
  for (int t = 0; t < static_cast<int>(a.transitions.size()); ++t) {
    out[a.transitions[t].from].push_back(t);
  }
  std::vector<int> order = ev.order;
  if (options.order == ExplorationOrder::Reverse) {
    // Another valid topological order: prefer the largest ready state.
    std::vector<int> indegree(n, 0);
    for (const auto& t : a.transitions) {
      ++indegree[t.to];
    }
    std::priority_queue<int> ready;
    for (int q = 0; q < n; ++q) {
      if (indegree[q] == 0) {
        ready.push(q);
      }
    }
    order.clear();
    while (!ready.empty()) {
      const int q = ready.top();
      ready.pop();
      order.push_back(q);
      for (int t : out[q]) {
        if (--indegree[a.transitions[t].to] == 0) {
          ready.push(a.transitions[t].to);
        }
      }
    }
    for (auto& ts : out) {
      std::reverse(ts.begin(), ts.end());
    }
  }

  // Longest remaining label length to any final state.
  std::vector<long> remaining(n, kUnreachable);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int q = *it;
    if (a.is_final(q)) {
      remaining[q] = 0;
    }
    for (int t : out[q]) {
      const int r = a.transitions[t].to;
      if (remaining[r] != kUnreachable) {
        remaining[q] = std::max(
            remaining[q],
            remaining[r] + static_cast<long>(a.transitions[t].label.size()));
      }
    }
  }

  MembershipResult result;
  std::vector<std::vector<SearchNode>> nodes(n);
  std::vector<std::unordered_map<std::vector<int>, int, KeyHash>> index(n);
  if (remaining[a.initial] == kUnreachable) {
    return result;
  }
  nodes[a.initial].push_back({});
  index[a.initial].emplace(std::vector<int>{}, 0);
  result.nodes = 1;

  for (int q : order) {
    for (int i = 0; i < static_cast<int>(nodes[q].size()); ++i) {
      if (a.is_final(q) && nodes[q][i].word.empty()) {
        std::vector<int> path;
        int s = q;
        int j = i;
        while (nodes[s][j].transition >= 0) {
          const SearchNode& node = nodes[s][j];
          path.push_back(node.transition);
          const int ps = node.pred_state;
          j = node.pred_index;
          s = ps;
        }
        std::reverse(path.begin(), path.end());
        result.status = MembershipStatus::Found;
        result.witness = std::move(path);
        if (tree != nullptr &&
            !is_identity_stacked(path_label(a, result.witness), *tree)) {
          throw std::logic_error("witness rejected by the stacked machine");
        }
        return result;
      }
      for (int t : out[q]) {
        const int r = a.transitions[t].to;
        if (remaining[r] == kUnreachable) {
          continue;
        }
        GroupWord next =
            reduce_append(nodes[q][i].word, a.transitions[t].label, alpha);
        if (options.prune && static_cast<long>(next.size()) > remaining[r]) {
          continue;
        }
        auto key = canonical_key(next);
        if (index[r].count(key) != 0) {
          continue;
        }
        index[r].emplace(std::move(key), static_cast<int>(nodes[r].size()));
        nodes[r].push_back({std::move(next), q, i, t});
        if (++result.nodes > options.node_cap) {
          result.status = MembershipStatus::ResourceExhausted;
          return result;
        }
      }
    }
    // Nodes of q are no longer needed except for back-pointers.
    for (auto& node : nodes[q]) {
      GroupWord().swap(node.word);
    }
    index[q].clear();
  }
  return result;
}

bool membership_one_brute(const WordAutomaton& a,
                          const IndependenceAlphabet& alpha,
                          std::size_t path_cap) {
  validate_automaton(a, alpha);
  if (!check_acyclic(a).ok) {
    throw InvalidInput("membership_one_brute requires an acyclic automaton");
  }
  std::vector<std::vector<int>> out(a.states);
  for (int t = 0; t < static_cast<int>(a.transitions.size()); ++t) {
    out[a.transitions[t].from].push_back(t);
  }
  std::size_t paths = 0;
  bool found = false;
  GroupWord label;
  std::function<void(int)> dfs = [&](int q) {
    if (found) {
      return;
    }
    if (a.is_final(q)) {
      if (++paths > path_cap) {
        throw ResourceExhausted("path cap exceeded");
      }
      if (is_identity(label, alpha)) {
        found = true;
        return;
      }
    }
    for (int t : out[q]) {
      const auto& l = a.transitions[t].label;
      label.insert(label.end(), l.begin(), l.end());
      dfs(a.transitions[t].to);
      label.resize(label.size() - l.size());
    }
  };
  dfs(a.initial);
  return found;
}

WordAutomaton unroll_loops(const WordAutomaton& a, long budget) {
  return unroll_loops(a, std::vector<long>(a.states, budget));
}

WordAutomaton unroll_loops(const WordAutomaton& a,
                           const std::vector<long>& budget_per_state) {
  const AcyclicityEvidence ev = check_acyclic_loop(a);
  if (!ev.ok) {
    throw InvalidInput("not an acyclic loop automaton: " + ev.reason);
  }
  std::vector<const GroupWord*> loop(a.states, nullptr);
  for (const auto& t : a.transitions) {
    if (t.from == t.to) {
      loop[t.from] = &t.label;
    }
  }
  WordAutomaton b;
  b.states = a.states;
  b.finals = a.finals;
  // entry[q]: where incoming transitions of q land.
  std::vector<int> entry(a.states);
  for (int q = 0; q < a.states; ++q) {
    entry[q] = q;
    if (loop[q] == nullptr) {
      continue;
    }
    const long budget = budget_per_state.at(q);
    // Copies c_0..c_budget; c_i -> c_{i+1} reads the loop, c_i -> q exits.
    const int first = b.states;
    b.states += static_cast<int>(budget) + 1;
    for (long i = 0; i <= budget; ++i) {
      const int c = first + static_cast<int>(i);
      if (i < budget) {
        b.transitions.push_back({c, c + 1, *loop[q]});
      }
      b.transitions.push_back({c, q, {}});
    }
    entry[q] = first;
  }
  for (const auto& t : a.transitions) {
    if (t.from != t.to) {
      b.transitions.push_back({t.from, entry[t.to], t.label});
    }
  }
  b.initial = entry[a.initial];
  return b;
}

}  // namespace raag
