#include "raag/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace raag {

void validate_cnf(const CnfFormula& f) {
  if (f.variables < 0) {
    throw InvalidInput("negative variable count");
  }
  for (const auto& clause : f.clauses) {
    if (clause.empty()) {
      throw InvalidInput("empty clause");
    }
    if (clause.size() > 3) {
      throw InvalidInput("clause with more than three literals");
    }
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.variables) {
        throw InvalidInput("literal out of range: " + std::to_string(lit));
      }
    }
  }
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  long declared = -1;
  bool header = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") {
      continue;
    }
    if (first == "p") {
      std::string kind;
      if (header || !(ls >> kind >> f.variables >> declared) || kind != "cnf") {
        throw InvalidInput("malformed DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) {
      throw InvalidInput("clause before the DIMACS header");
    }
    std::istringstream rest(line);
    std::string tok;
    while (rest >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') {
        throw InvalidInput("bad DIMACS token '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) {
    throw InvalidInput("missing DIMACS header");
  }
  if (!current.empty()) {
    throw InvalidInput("unterminated clause");
  }
  if (static_cast<long>(f.clauses.size()) != declared) {
    throw InvalidInput("clause count does not match the header");
  }
  validate_cnf(f);
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out << lit << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

bool satisfiable_brute(const CnfFormula& f) {
  validate_cnf(f);
  for (unsigned long v = 0; v < (1UL << f.variables); ++v) {
    const bool ok = std::all_of(
        f.clauses.begin(), f.clauses.end(), [&](const std::vector<int>& c) {
          return std::any_of(c.begin(), c.end(), [&](int lit) {
            const bool value = (v >> (std::abs(lit) - 1)) & 1UL;
            return lit > 0 ? value : !value;
          });
        });
    if (ok) {
      return true;
    }
  }
  return false;
}

std::vector<int> first_primes(std::size_t n) {
  std::vector<int> primes;
  for (int c = 2; primes.size() < n; ++c) {
    if (std::none_of(primes.begin(), primes.end(),
                     [c](int p) { return c % p == 0; })) {
      primes.push_back(c);
    }
  }
  return primes;
}

IndependenceAlphabet p4_alphabet() {
  return validate_alphabet({"a", "b", "c", "d"},
                           {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

IndependenceAlphabet f2_alphabet() { return validate_alphabet({"a", "b"}, {}); }

namespace {

constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kC = 2;
constexpr int kD = 3;

GroupWord letters(std::initializer_list<int> gens) {
  GroupWord w;
  for (int g : gens) {
    w.push_back({g, false});
  }
  return w;
}

struct Builder {
  LoopAutomaton out;

  int add_state() { return out.automaton.states++; }
  void add(int from, int to, GroupWord label, std::string why) {
    out.automaton.transitions.push_back({from, to, std::move(label)});
    out.provenance.push_back(std::move(why));
  }
};

std::string literal_name(int lit) {
  return (lit > 0 ? "x" : "~x") + std::to_string(std::abs(lit));
}

}  // namespace

SatAutomata sat_to_p4_automata(const CnfFormula& f) {
  validate_cnf(f);
  const auto primes = first_primes(static_cast<std::size_t>(f.variables));
  const GroupWord bc = letters({kB, kC});
  const std::size_t m = f.clauses.size();

  Builder one;
  int prev = one.add_state();
  one.out.automaton.initial = prev;
  for (std::size_t i = 0; i < m; ++i) {
    const int next = one.add_state();
    const std::string clause = "clause " + std::to_string(i + 1);
    for (int lit : f.clauses[i]) {
      const int p = primes[std::abs(lit) - 1];
      const std::string tag = clause + " " + literal_name(lit);
      // Positive literal: a (bc)^(p t) d.  Negative: a (bc)^(p t + r) d.
      const int first_offset = lit > 0 ? 0 : 1;
      const int last_offset = lit > 0 ? 0 : p - 1;
      for (int r = first_offset; r <= last_offset; ++r) {
        const int branch = one.add_state();
        GroupWord entry = letters({kA});
        append_power(entry, bc, r);
        const std::string where = tag + " r=" + std::to_string(r);
        one.add(prev, branch, entry, where + " enter");
        one.add(branch, branch, power(bc, p), where + " loop");
        one.add(branch, next, letters({kD}), where + " exit");
      }
    }
    prev = next;
  }
  one.out.automaton.finals = {prev};

  Builder two;
  int at = two.add_state();
  two.out.automaton.initial = at;
  if (m > 0) {
    two.add(at, at, letters({kB}), "leading b");
    for (std::size_t i = 1; i <= m; ++i) {
      const int next = two.add_state();
      two.add(at, next, letters({kA, kD}), "ad " + std::to_string(i));
      if (i < m) {
        two.add(next, next, bc, "bc " + std::to_string(i));
      } else {
        two.add(next, next, letters({kC}), "trailing c");
      }
      at = next;
    }
  }
  two.out.automaton.finals = {at};

  SatAutomata result{std::move(one.out), std::move(two.out), 0};
  std::int64_t product = 1;
  int largest = 0;
  for (int p : primes) {
    product *= p;
    largest = std::max(largest, p);
  }
  result.loop_budget = product + largest;
  return result;
}

LoopAutomaton intersection_to_group_membership(const LoopAutomaton& first,
                                               const LoopAutomaton& second) {
  const WordAutomaton& x = first.automaton;
  const WordAutomaton& y = second.automaton;
  Builder b;
  b.out.automaton.states = x.states + y.states;
  b.out.automaton.initial = x.initial;
  for (std::size_t t = 0; t < x.transitions.size(); ++t) {
    const auto& tr = x.transitions[t];
    b.add(tr.from, tr.to, tr.label, "first: " + first.provenance.at(t));
  }
  const int offset = x.states;
  for (std::size_t t = 0; t < y.transitions.size(); ++t) {
    const auto& tr = y.transitions[t];
    b.add(tr.to + offset, tr.from + offset, inverse(tr.label),
          "second reversed: " + second.provenance.at(t));
  }
  for (int f : x.finals) {
    for (int g : y.finals) {
      b.add(f, g + offset, {}, "join");
    }
  }
  b.out.automaton.finals = {y.initial + offset};
  return b.out;
}

GroupWord p4_state_word(int q) {
  const GroupWord ada = letters({kA, kD, kA});
  GroupWord w = power(ada, q);
  w.push_back({kD, false});
  append_power(w, ada, -q);
  return w;
}

GroupWord f2_alpha(int i) {
  GroupWord w(static_cast<std::size_t>(i), Letter{0, false});
  w.push_back({1, false});
  w.insert(w.end(), static_cast<std::size_t>(i), Letter{0, true});
  return w;
}

namespace {

// A single final state, adding a fresh one fed by empty transitions.
LoopAutomaton with_single_final(const LoopAutomaton& a) {
  if (a.automaton.finals.size() == 1) {
    return a;
  }
  Builder b;
  b.out = a;
  const int target = b.add_state();
  for (int f : a.automaton.finals) {
    b.add(f, target, {}, "final " + std::to_string(f));
  }
  b.out.automaton.finals = {target};
  return b.out;
}

// Transition indices such that t comes before every transition leaving t.to,
// with the loop of a state between its incoming and outgoing transitions.
std::vector<std::size_t> transition_order(const WordAutomaton& a,
                                          const std::vector<int>& state_order) {
  std::vector<int> rank(a.states);
  for (std::size_t i = 0; i < state_order.size(); ++i) {
    rank[state_order[i]] = static_cast<int>(i);
  }
  std::vector<std::size_t> order(a.transitions.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    order[t] = t;
  }
  auto key = [&](std::size_t t) {
    const auto& tr = a.transitions[t];
    return std::pair{rank[tr.from], tr.from == tr.to ? 0 : 1};
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t s, std::size_t t) { return key(s) < key(t); });
  return order;
}

GroupWord doubled(const GroupWord& w) {
  GroupWord out;
  for (const auto& x : w) {
    out.push_back(x);
    out.push_back(x);
  }
  return out;
}

}  // namespace

GadgetInstance loop_automaton_to_knapsack_p4(const LoopAutomaton& input,
                                             std::int64_t loop_budget) {
  const IndependenceAlphabet alpha = p4_alphabet();
  validate_automaton(input.automaton, alpha);
  if (input.automaton.finals.empty()) {
    throw InvalidInput("automaton without final states");
  }
  const LoopAutomaton a = with_single_final(input);
  const AcyclicityEvidence ev = check_acyclic_loop(a.automaton);
  if (!ev.ok) {
    throw InvalidInput("not an acyclic loop automaton: " + ev.reason);
  }
  // States are renamed 1..n.
  auto tilde = [](int q) { return p4_state_word(q + 1); };
  std::vector<GroupWord> cycles;
  GadgetInstance g;
  bool has_loop = false;
  for (std::size_t t : transition_order(a.automaton, ev.order)) {
    const auto& tr = a.automaton.transitions[t];
    GroupWord w = tilde(tr.from);
    const GroupWord mid = doubled(tr.label);
    w.insert(w.end(), mid.begin(), mid.end());
    const GroupWord tail = inverse(tilde(tr.to));
    w.insert(w.end(), tail.begin(), tail.end());
    cycles.push_back(std::move(w));
    g.provenance.push_back(a.provenance.at(t));
    g.budgets.push_back(tr.from == tr.to ? std::max<std::int64_t>(loop_budget, 1) : 1);
    has_loop = has_loop || tr.from == tr.to;
  }
  GroupWord target = tilde(a.automaton.initial);
  const GroupWord tail = inverse(tilde(a.automaton.finals.front()));
  target.insert(target.end(), tail.begin(), tail.end());
  g.equation = knapsack_instance(alpha, cycles, target);
  g.budget = has_loop ? std::max<std::int64_t>(loop_budget, 1) : 1;
  return g;
}

GadgetInstance acyclic_automaton_to_knapsack_f2(const WordAutomaton& input) {
  const IndependenceAlphabet alpha = f2_alphabet();
  validate_automaton(input, alpha);
  if (input.finals.empty()) {
    throw InvalidInput("automaton without final states");
  }
  LoopAutomaton wrapped{input, {}};
  for (std::size_t t = 0; t < input.transitions.size(); ++t) {
    wrapped.provenance.push_back("transition " + std::to_string(t));
  }
  const LoopAutomaton a = with_single_final(wrapped);
  const AcyclicityEvidence ev = check_acyclic(a.automaton);
  if (!ev.ok) {
    throw InvalidInput("not an acyclic automaton: " + ev.reason);
  }
  const int n = a.automaton.states;
  auto phi = [n](const GroupWord& w) {
    GroupWord out;
    for (const auto& x : w) {
      GroupWord image = f2_alpha(n + 1 + x.gen);
      if (x.inverse) {
        image = inverse(image);
      }
      out.insert(out.end(), image.begin(), image.end());
    }
    return out;
  };
  GadgetInstance g;
  std::vector<GroupWord> cycles;
  for (std::size_t t : transition_order(a.automaton, ev.order)) {
    const auto& tr = a.automaton.transitions[t];
    GroupWord w = f2_alpha(tr.from + 1);
    const GroupWord mid = phi(tr.label);
    w.insert(w.end(), mid.begin(), mid.end());
    const GroupWord tail = inverse(f2_alpha(tr.to + 1));
    w.insert(w.end(), tail.begin(), tail.end());
    cycles.push_back(std::move(w));
    g.provenance.push_back(a.provenance.at(t));
    g.budgets.push_back(1);
  }
  GroupWord target = f2_alpha(a.automaton.initial + 1);
  const GroupWord tail = inverse(f2_alpha(a.automaton.finals.front() + 1));
  target.insert(target.end(), tail.begin(), tail.end());
  g.equation = knapsack_instance(alpha, cycles, target);
  g.equation.mode = SolveMode::SubsetSum;
  g.budget = 1;
  return g;
}

GadgetInstance sat_to_p4_knapsack(const CnfFormula& f) {
  const SatAutomata pair = sat_to_p4_automata(f);
  const LoopAutomaton joined =
      intersection_to_group_membership(pair.clauses, pair.alignment);
  return loop_automaton_to_knapsack_p4(joined, pair.loop_budget);
}

}  // namespace raag
