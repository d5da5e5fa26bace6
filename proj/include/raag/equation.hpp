#ifndef RAAG_EQUATION_HPP_
#define RAAG_EQUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "raag/alphabet.hpp"
#include "raag/group.hpp"

namespace raag {

enum class SolveMode { Knapsack, SubsetSum, Integer };

const char* to_string(SolveMode mode);
SolveMode parse_mode(const std::string& s);

// h_0 g_1^x_1 h_1 ... g_k^x_k h_k = 1.
struct ExponentEquation {
  IndependenceAlphabet alphabet;
  std::vector<GroupWord> constants;  // k + 1 words
  std::vector<GroupWord> cycles;     // k words
  std::vector<std::string> variables;
  SolveMode mode = SolveMode::Knapsack;

  std::size_t k() const { return cycles.size(); }
  // Sum of all word lengths.
  std::size_t size() const;
  // Pairwise distinct variables.
  bool knapsack_shape() const;
  // Distinct variable names in order of first occurrence.
  std::vector<std::string> distinct_variables() const;
  // For every cycle, the position of its variable in distinct_variables().
  std::vector<std::size_t> variable_slots() const;

  bool operator==(const ExponentEquation&) const = default;
};

// Throws InvalidInput on arity mismatches or out-of-range letters.
void validate_equation(const ExponentEquation& eq);

// Knapsack instance g_1^x_1 ... g_k^x_k = target, fresh variables x1..xk.
ExponentEquation knapsack_instance(const IndependenceAlphabet& alpha,
                                   const std::vector<GroupWord>& cycles,
                                   const GroupWord& target);

// Exponents per distinct variable.
using Assignment = std::vector<std::int64_t>;

// The word h_0 g_1^x_1 ... h_k for an assignment over distinct variables.
GroupWord instantiate(const ExponentEquation& eq, const Assignment& x);

bool satisfies(const ExponentEquation& eq, const Assignment& x);

}  // namespace raag

#endif  // RAAG_EQUATION_HPP_
