#include "doctest.h"
#include "raag/gadgets.hpp"
#include "raag/knapsack.hpp"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

MonoidWord repeat(const MonoidWord& w, int times) {
  MonoidWord out;
  for (int i = 0; i < times; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

MonoidWord join(std::initializer_list<MonoidWord> parts) {
  MonoidWord out;
  for (const auto& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

LoopAutomaton single(const GroupWord& label) {
  return {WordAutomaton{2, 0, {1}, {{0, 1, label}}}, {"t"}};
}

// 1 in L(first) L(second)^-1 with every loop taken at most `budget` times.
bool meets(const LoopAutomaton& first, const LoopAutomaton& second, long budget) {
  const LoopAutomaton m = intersection_to_group_membership(first, second);
  return membership_one(unroll_loops(m.automaton, budget), p4_alphabet()).status ==
         MembershipStatus::Found;
}

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("primes and fixed words") {
  CHECK(first_primes(0).empty());
  CHECK(first_primes(1) == std::vector<int>{2});
  CHECK(first_primes(4) == std::vector<int>{2, 3, 5, 7});
  const auto p = p4_alphabet();
  CHECK(p == p4());
  CHECK(p4_state_word(1) == word(p, "a d a d a^-1 d^-1 a^-1"));
  CHECK(f2_alpha(2) == word(f2_alphabet(), "a a b a^-1 a^-1"));
}

TEST_CASE("DIMACS") {
  const CnfFormula f = parse_dimacs("c example\np cnf 2 2\n1 -2 0\n2 0\n");
  CHECK(f.variables == 2);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2}, {2}});
  CHECK(write_dimacs(f) == "p cnf 2 2\n1 -2 0\n2 0\n");
  CHECK(parse_dimacs(write_dimacs(f)) == f);
  CHECK(satisfiable_brute(f));
  CHECK_FALSE(satisfiable_brute(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")));
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), InvalidInput);
  CHECK_THROWS_AS(validate_cnf({3, {{1, 2, 3, -1}}}), InvalidInput);
}

TEST_CASE("trace identity behind the alignment automaton") {
  const auto p = p4();
  for (int N = 0; N <= 3; ++N) {
    for (int m = 1; m <= 3; ++m) {
      const MonoidWord bc = repeat(mword(p, "bc"), N);
      const MonoidWord left = repeat(join({mword(p, "a"), bc, mword(p, "d")}), m);
      const MonoidWord right =
          join({repeat(mword(p, "b"), N), repeat(join({mword(p, "ad"), bc}), m - 1),
                mword(p, "ad"), repeat(mword(p, "c"), N)});
      CHECK(traces_equal(left, right, p));
      CHECK(oracle_traces_equal(left, right, p));
    }
  }
}

TEST_CASE("SAT automata") {
  const SatAutomata one = sat_to_p4_automata({1, {{1}}});
  CHECK(check_acyclic_loop(one.clauses.automaton).ok);
  CHECK(check_acyclic_loop(one.alignment.automaton).ok);
  CHECK(one.clauses.provenance.size() == one.clauses.automaton.transitions.size());
  CHECK(one.loop_budget == 2 + 2);
  CHECK(meets(one.clauses, one.alignment, 2));

  const SatAutomata contra = sat_to_p4_automata({1, {{1}, {-1}}});
  CHECK_FALSE(meets(contra.clauses, contra.alignment, 6));

  const auto p = p4();
  CHECK(meets(single(word(p, "a b")), single(word(p, "a b")), 0));
  CHECK(meets(single(word(p, "a b")), single(word(p, "b a")), 0));
  CHECK_FALSE(meets(single(word(p, "a")), single(word(p, "b")), 0));
}

TEST_CASE("P4 knapsack gadget") {
  const auto p = p4();
  const GadgetInstance yes = loop_automaton_to_knapsack_p4(single(word(p, "a a^-1")), 1);
  REQUIRE(yes.equation.k() == 1);
  CHECK(satisfies(yes.equation, {1}));
  CHECK(yes.provenance.size() == 1);

  const GadgetInstance no = loop_automaton_to_knapsack_p4(single(word(p, "a")), 8);
  CHECK_FALSE(search_box(no.equation, std::vector<std::int64_t>(no.equation.k(), 8)));

  LoopAutomaton bad = single(word(p, "a"));
  bad.automaton.transitions.push_back({1, 0, word(p, "b")});
  bad.provenance.push_back("back");
  CHECK_THROWS_AS(loop_automaton_to_knapsack_p4(bad, 1), InvalidInput);
}

TEST_CASE("doubling letters is injective on short words") {
  const auto p = p4();
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const auto& w : all_words(4, len)) {
      GroupWord doubled;
      for (const auto& x : w) {
        doubled.push_back(x);
        doubled.push_back(x);
      }
      CHECK(is_identity(doubled, p) == oracle_identity(w, p));
    }
  }
}

TEST_CASE("F2 gadget") {
  const auto f = f2_alphabet();
  const WordAutomaton a{2, 0, {1}, {{0, 1, word(f, "a a^-1")}}};
  const GadgetInstance g = acyclic_automaton_to_knapsack_f2(a);
  CHECK(g.equation.mode == SolveMode::SubsetSum);
  const auto out = solve(g.equation);
  CHECK(out.status == SolveStatus::Solvable);
  CHECK(out.assignment == Assignment{1});

  WordAutomaton cyclic = a;
  cyclic.transitions.push_back({1, 0, {}});
  CHECK_THROWS_AS(acyclic_automaton_to_knapsack_f2(cyclic), InvalidInput);
}

}  // TEST_SUITE
