#ifndef RAAG_GADGETS_HPP_
#define RAAG_GADGETS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "raag/alphabet.hpp"
#include "raag/automata.hpp"
#include "raag/equation.hpp"

namespace raag {

// Clauses hold signed 1-based literals, at most three per clause.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

void validate_cnf(const CnfFormula& f);
CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& f);
bool satisfiable_brute(const CnfFormula& f);

std::vector<int> first_primes(std::size_t n);

// Path a - b - c - d.
IndependenceAlphabet p4_alphabet();
IndependenceAlphabet f2_alphabet();

struct LoopAutomaton {
  WordAutomaton automaton;
  std::vector<std::string> provenance;  // one entry per transition
};

struct SatAutomata {
  LoopAutomaton clauses;    // product of clause languages
  LoopAutomaton alignment;  // b* (ad (bc)*)^(m-1) ad c*
  std::int64_t loop_budget = 0;
};

SatAutomata sat_to_p4_automata(const CnfFormula& f);

// Automaton for L(first) L(second)^-1.
LoopAutomaton intersection_to_group_membership(const LoopAutomaton& first,
                                               const LoopAutomaton& second);

struct GadgetInstance {
  ExponentEquation equation;
  std::vector<std::string> provenance;  // one entry per cycle
  // Largest exponent a witness needs, per cycle and overall.  Transitions
  // other than loops occur at most once on a path.
  std::vector<std::int64_t> budgets;
  std::int64_t budget = 0;
};

// (ada)^q d (ada)^-q over p4_alphabet().
GroupWord p4_state_word(int q);
// a^i b a^-i over f2_alphabet().
GroupWord f2_alpha(int i);

// Throws InvalidInput unless the automaton is an acyclic loop automaton.
GadgetInstance loop_automaton_to_knapsack_p4(const LoopAutomaton& a,
                                             std::int64_t loop_budget);

// Throws InvalidInput on cyclic input or letters outside {a, b}.
GadgetInstance acyclic_automaton_to_knapsack_f2(const WordAutomaton& a);

// 3SAT -> loop automata -> membership automaton -> P4 knapsack.
GadgetInstance sat_to_p4_knapsack(const CnfFormula& f);

}  // namespace raag

#endif  // RAAG_GADGETS_HPP_
