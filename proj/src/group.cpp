#include "raag/group.hpp"

#include <algorithm>

namespace raag {

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return out;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

void append_power(GroupWord& out, const GroupWord& w, std::int64_t e) {
  if (e < 0) {
    append_power(out, inverse(w), -e);
    return;
  }
  out.reserve(out.size() + w.size() * static_cast<std::size_t>(e));
  for (std::int64_t i = 0; i < e; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
}

GroupWord power(const GroupWord& w, std::int64_t e) {
  GroupWord out;
  append_power(out, w, e);
  return out;
}

GroupWord parse_group_word(const std::vector<std::string>& names,
                           const IndependenceAlphabet& alpha) {
  GroupWord w;
  w.reserve(names.size());
  for (const auto& s : names) {
    std::string_view base = s;
    bool inv = false;
    if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
      base.remove_suffix(3);
      inv = true;
    }
    const int g = alpha.index_of(base);
    if (g < 0) {
      throw InvalidInput("unknown letter '" + s + "'");
    }
    w.push_back({g, inv});
  }
  return w;
}

std::vector<std::string> format_group_word(const GroupWord& w,
                                           const IndependenceAlphabet& alpha) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const auto& x : w) {
    out.push_back(alpha.name(x.gen) + (x.inverse ? "^-1" : ""));
  }
  return out;
}

std::string to_string(const GroupWord& w, const IndependenceAlphabet& alpha) {
  std::string s;
  for (const auto& name : format_group_word(w, alpha)) {
    if (!s.empty()) {
      s += ' ';
    }
    s += name;
  }
  return s;
}

namespace {

void push_letter(GroupWord& r, Letter x, const IndependenceAlphabet& alpha) {
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i].gen == x.gen) {
      if (r[i].inverse != x.inverse) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
      break;
    }
    if (!alpha.independent(r[i].gen, x.gen)) {
      break;
    }
  }
  r.push_back(x);
}

GroupWord canonical_order(const GroupWord& r,
                          const IndependenceAlphabet& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::size_t> last(n, 0);
  std::vector<std::vector<Letter>> steps;
  for (const auto& x : r) {
    std::size_t level = 0;
    for (int h = 0; h < n; ++h) {
      if (h == x.gen || !alpha.independent(x.gen, h)) {
        level = std::max(level, last[h]);
      }
    }
    ++level;
    last[x.gen] = level;
    if (steps.size() < level) {
      steps.resize(level);
    }
    steps[level - 1].push_back(x);
  }
  GroupWord out;
  out.reserve(r.size());
  for (auto& step : steps) {
    std::sort(step.begin(), step.end(), [&](Letter a, Letter b) {
      return alpha.name_rank(a.gen) < alpha.name_rank(b.gen);
    });
    out.insert(out.end(), step.begin(), step.end());
  }
  return out;
}

void check_letters(const GroupWord& w, const IndependenceAlphabet& alpha) {
  for (const auto& x : w) {
    if (x.gen < 0 || x.gen >= static_cast<int>(alpha.size())) {
      throw InvalidInput("letter out of range");
    }
  }
}

}  // namespace

GroupWord reduce_append(const GroupWord& reduced, const GroupWord& suffix,
                        const IndependenceAlphabet& alpha) {
  check_letters(suffix, alpha);
  GroupWord r = reduced;
  for (const auto& x : suffix) {
    push_letter(r, x, alpha);
  }
  return canonical_order(r, alpha);
}

GroupWord reduce_word(const GroupWord& w, const IndependenceAlphabet& alpha) {
  return reduce_append({}, w, alpha);
}

bool is_identity(const GroupWord& w, const IndependenceAlphabet& alpha) {
  check_letters(w, alpha);
  GroupWord r;
  for (const auto& x : w) {
    push_letter(r, x, alpha);
  }
  return r.empty();
}

void append_reduced(GroupWord& reduced, const GroupWord& suffix,
                    const IndependenceAlphabet& alpha) {
  check_letters(suffix, alpha);
  for (const auto& x : suffix) {
    push_letter(reduced, x, alpha);
  }
}

GroupWord canonical_form(const GroupWord& reduced,
                         const IndependenceAlphabet& alpha) {
  return canonical_order(reduced, alpha);
}

std::vector<int> canonical_key(const GroupWord& reduced) {
  std::vector<int> key;
  key.reserve(reduced.size());
  for (const auto& x : reduced) {
    key.push_back(2 * x.gen + (x.inverse ? 1 : 0));
  }
  return key;
}

// ---------------------------------------------------------------------------
// Stacked machine

namespace {

StackedState fresh_state(const DecompositionTree& node) {
  StackedState s;
  if (node.kind == NodeKind::DirectZ) {
    s.child.push_back(fresh_state(node.children.front()));
  }
  return s;
}

bool state_is_one(const DecompositionTree& node, const StackedState& s) {
  switch (node.kind) {
    case NodeKind::Trivial:
      return true;
    case NodeKind::DirectZ:
      return s.counter == 0 && state_is_one(node.children.front(), s.child[0]);
    case NodeKind::FreeProduct:
      return s.suspended.empty() &&
             (s.child.empty() ||
              state_is_one(node.children[s.active_factor], s.child[0]));
  }
  return false;
}

void feed_state(const DecompositionTree& node, StackedState& s, Letter x,
                StackedStats& stats) {
  switch (node.kind) {
    case NodeKind::Trivial:
      throw InvalidInput("letter not covered by the decomposition tree");
    case NodeKind::DirectZ:
      if (x.gen == node.apex) {
        s.counter += x.inverse ? -1 : 1;
      } else {
        feed_state(node.children.front(), s.child[0], x, stats);
      }
      return;
    case NodeKind::FreeProduct: {
      const int f = node.child_containing(x.gen);
      if (f < 0) {
        throw InvalidInput("letter not covered by the decomposition tree");
      }
      if (s.child.empty() || s.active_factor != f) {
        // Factor switch: checkpoint the finished segment.
        if (!s.child.empty()) {
          if (state_is_one(node.children[s.active_factor], s.child[0])) {
            s.child.clear();
          } else {
            s.suspended.push_back(std::move(s.child[0]));
            s.suspended_factor.push_back(s.active_factor);
            s.child.clear();
            ++stats.pushes;
          }
        }
        if (!s.suspended.empty() && s.suspended_factor.back() == f) {
          s.child.push_back(std::move(s.suspended.back()));
          s.suspended.pop_back();
          s.suspended_factor.pop_back();
          ++stats.resumes;
        } else {
          s.child.push_back(fresh_state(node.children[f]));
        }
        s.active_factor = f;
      }
      feed_state(node.children[f], s.child[0], x, stats);
      return;
    }
  }
}

}  // namespace

StackedMachine::StackedMachine(const DecompositionTree& tree)
    : tree_(&tree), state_(fresh_state(tree)) {}

void StackedMachine::feed(Letter x) { feed_state(*tree_, state_, x, stats_); }

bool StackedMachine::at_identity() const {
  return state_is_one(*tree_, state_);
}

bool is_identity_stacked(const GroupWord& w, const DecompositionTree& tree,
                         StackedStats* stats) {
  StackedMachine machine(tree);
  for (const auto& x : w) {
    machine.feed(x);
  }
  if (stats != nullptr) {
    *stats = machine.stats();
  }
  return machine.at_identity();
}

// ---------------------------------------------------------------------------
// Free product combinatorics

FreeSplit split_of(const DecompositionTree& free_node,
                   std::size_t alphabet_size) {
  if (free_node.kind != NodeKind::FreeProduct) {
    throw InvalidInput("split requires a free product node");
  }
  FreeSplit split;
  split.side.assign(alphabet_size, -1);
  for (std::size_t c = 0; c < free_node.children.size(); ++c) {
    for (int g : free_node.children[c].generators) {
      split.side.at(g) = c == 0 ? 0 : 1;
    }
  }
  return split;
}

std::vector<GroupWord> syllables(const GroupWord& w, const FreeSplit& split) {
  std::vector<GroupWord> out;
  int current = -2;
  for (const auto& x : w) {
    const int f = split.factor(x.gen);
    if (f < 0) {
      throw InvalidInput("letter outside the free product");
    }
    if (f != current) {
      out.emplace_back();
      current = f;
    }
    out.back().push_back(x);
  }
  return out;
}

std::size_t syllable_count(const GroupWord& w, const FreeSplit& split) {
  std::size_t count = 0;
  int current = -2;
  for (const auto& x : w) {
    const int f = split.factor(x.gen);
    if (f != current) {
      ++count;
      current = f;
    }
  }
  return count;
}

CyclicCore cyclically_reduce(const GroupWord& w, const FreeSplit& split,
                             const IndependenceAlphabet& alpha) {
  GroupWord core = reduce_word(w, alpha);
  if (core.empty()) {
    throw InvalidInput("the identity has no cyclic core");
  }
  // Reduced words of a free product keep factor letters contiguous only up
  // to commutation inside a factor, so syllables here are well defined.
  std::vector<GroupWord> parts = syllables(core, split);
  GroupWord f_inv;  // f^-1, accumulated left to right
  std::size_t lo = 0;
  std::size_t hi = parts.size();
  while (hi - lo >= 3 &&
         split.factor(parts[lo].front().gen) ==
             split.factor(parts[hi - 1].front().gen)) {
    GroupWord joined = reduce_word(concat(parts[hi - 1], parts[lo]), alpha);
    f_inv.insert(f_inv.end(), parts[lo].begin(), parts[lo].end());
    if (joined.empty()) {
      ++lo;
      --hi;
      continue;
    }
    // w' = s_lo X s_hi = s_lo (X s_hi s_lo) s_lo^-1
    parts[hi - 1] = joined;
    ++lo;
    break;
  }
  CyclicCore result;
  for (std::size_t i = lo; i < hi; ++i) {
    result.core.insert(result.core.end(), parts[i].begin(), parts[i].end());
  }
  result.conjugator = inverse(f_inv);
  return result;
}

}  // namespace raag
