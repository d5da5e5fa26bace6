#ifndef RAAG_KNAPSACK_HPP_
#define RAAG_KNAPSACK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/alphabet.hpp"
#include "raag/automata.hpp"
#include "raag/equation.hpp"
#include "raag/group.hpp"
#include "raag/semilinear.hpp"

namespace raag {

struct Preprocessed {
  ExponentEquation equation;
  std::vector<std::size_t> kept;  // original index of every remaining cycle
  std::vector<std::string> free_variables;
};

// Reduces all words and drops trivial cycles.
Preprocessed preprocess(const ExponentEquation& eq);
// Additionally conjugates every cycle to a cyclically reduced core for the
// given free product split.
Preprocessed preprocess(const ExponentEquation& eq, const FreeSplit& split);

struct TamenessNode {
  NodeKind kind = NodeKind::Trivial;
  int apex = -1;
  BigInt value;     // evaluated at the instance size n
  BigInt inflated;  // free product nodes evaluated at 3n
  std::vector<TamenessNode> children;
};

struct TamenessBound {
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt value;
  BigInt inflated_value;
  TamenessNode root;
};

TamenessBound tameness_bound(std::size_t n, std::size_t k,
                             const DecompositionTree& tree);
// Throws NotTransitiveForest for general alphabets.
TamenessBound tameness_bound(const ExponentEquation& eq);

// (n + 3k + 1) + k n^2.
BigInt free_product_threshold(std::size_t n, std::size_t k);

// t = vars * (rows * a)^(2 rows + 1).
BigInt papadimitriou_bound(std::size_t vars, std::size_t rows, const BigInt& a);

enum class SolveStatus { Solvable, Unsolvable, Unknown };
const char* to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<std::string> variables;  // distinct variable names
  Assignment assignment;               // when solvable
  std::optional<BigInt> bound;         // certificate when unsolvable
  std::string bound_source;
  BigInt budget = 0;                   // largest exponent bound fully searched
  std::string method;
};

struct SolveOptions {
  BigInt ceiling = 1024;
  std::size_t automaton_state_limit = 100'000;
  std::size_t node_cap = 1'000'000;
  std::size_t member_cap = 200'000;
  std::size_t subset_sum_cap = 24;
};

// Dispatches on the mode stored in the equation.
SolveOutcome solve(const ExponentEquation& eq, const SolveOptions& options = {});
SolveOutcome solve_knapsack(const ExponentEquation& eq,
                            const SolveOptions& options = {});
SolveOutcome solve_subset_sum(const ExponentEquation& eq,
                              const SolveOptions& options = {});
SolveOutcome solve_integer_valued(const ExponentEquation& eq,
                                  const SolveOptions& options = {});

// g^x becomes g^x (g^-1)^y with y named "<x>_neg".
ExponentEquation integer_rewrite(const ExponentEquation& eq);

// Every solution with all exponents <= B, in lexicographic order.  Throws
// ResourceExhausted when (B+1)^vars exceeds the cap.
std::vector<Assignment> brute_force_solutions(const ExponentEquation& eq,
                                              std::int64_t B,
                                              std::size_t cap = 20'000'000);

// Chain automaton; state (i, j) has index i * (B + 1) + j.  Throws
// InvalidInput for repeated variables.
WordAutomaton knapsack_to_automaton(const ExponentEquation& eq, std::int64_t B);

// Exponents read off an accepting path of knapsack_to_automaton.
Assignment assignment_from_path(const ExponentEquation& eq, std::int64_t B,
                                const WordAutomaton& a,
                                const std::vector<int>& path);

// Depth-first search over the box 0 <= x_i <= budget[i] for an equation of
// knapsack shape.  Prefixes are memoized by their reduced form and pruned
// with permutation images of the free projections of the alphabet.  Returns
// the lexicographically least solution in the box, or nullopt.  Throws
// ResourceExhausted past the node cap.
std::optional<Assignment> search_box(const ExponentEquation& eq,
                                     const std::vector<std::int64_t>& budget,
                                     std::size_t node_cap = 4'000'000,
                                     std::size_t* nodes = nullptr);
// Exact decision for free groups by saturating the loop automaton of
// h_0 g_1^* h_1 ... g_k^* h_k.  Throws InvalidInput unless the alphabet has
// no edges and the variables are distinct.
std::optional<Assignment> solve_free_group(const ExponentEquation& eq);

std::optional<Assignment> solve_within(const ExponentEquation& eq,
                                       std::int64_t B,
                                       std::size_t node_cap = 4'000'000);

// Exponent-sum vectors per distinct variable, and the constant part.
struct AbelianImage {
  std::vector<IntVector> columns;  // one per distinct variable, length |A|
  IntVector constant;
};
AbelianImage abelianize(const ExponentEquation& eq);

// Solutions of the abelianized equation over the distinct variables.  Equal
// to the solution set for complete alphabets.
SemilinearSet abelian_solution_set(const ExponentEquation& eq);

// Exact solution set; throws InvalidInput unless the alphabet is complete.
SemilinearSet solution_set(const ExponentEquation& eq);

}  // namespace raag

#endif  // RAAG_KNAPSACK_HPP_
