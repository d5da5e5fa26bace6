#include "raag/equation.hpp"

#include <algorithm>
#include <set>

namespace raag {

const char* to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Knapsack:
      return "knapsack";
    case SolveMode::SubsetSum:
      return "subsetsum";
    case SolveMode::Integer:
      return "integer";
  }
  return "?";
}

SolveMode parse_mode(const std::string& s) {
  if (s == "knapsack") {
    return SolveMode::Knapsack;
  }
  if (s == "subsetsum") {
    return SolveMode::SubsetSum;
  }
  if (s == "integer") {
    return SolveMode::Integer;
  }
  throw InvalidInput("unknown mode '" + s + "'");
}

std::size_t ExponentEquation::size() const {
  std::size_t n = 0;
  for (const auto& h : constants) {
    n += h.size();
  }
  for (const auto& g : cycles) {
    n += g.size();
  }
  return n;
}

bool ExponentEquation::knapsack_shape() const {
  std::set<std::string> seen(variables.begin(), variables.end());
  return seen.size() == variables.size();
}

std::vector<std::string> ExponentEquation::distinct_variables() const {
  std::vector<std::string> out;
  for (const auto& v : variables) {
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::size_t> ExponentEquation::variable_slots() const {
  const auto names = distinct_variables();
  std::vector<std::size_t> slots;
  for (const auto& v : variables) {
    slots.push_back(static_cast<std::size_t>(
        std::find(names.begin(), names.end(), v) - names.begin()));
  }
  return slots;
}

void validate_equation(const ExponentEquation& eq) {
  if (eq.constants.size() != eq.cycles.size() + 1) {
    throw InvalidInput("expected one more constant than cycles");
  }
  if (eq.variables.size() != eq.cycles.size()) {
    throw InvalidInput("expected one variable per cycle");
  }
  auto check = [&](const GroupWord& w) {
    for (const auto& x : w) {
      if (x.gen < 0 || x.gen >= static_cast<int>(eq.alphabet.size())) {
        throw InvalidInput("letter out of range");
      }
    }
  };
  std::for_each(eq.constants.begin(), eq.constants.end(), check);
  std::for_each(eq.cycles.begin(), eq.cycles.end(), check);
  for (const auto& v : eq.variables) {
    if (v.empty()) {
      throw InvalidInput("empty variable name");
    }
  }
}

ExponentEquation knapsack_instance(const IndependenceAlphabet& alpha,
                                   const std::vector<GroupWord>& cycles,
                                   const GroupWord& target) {
  ExponentEquation eq;
  eq.alphabet = alpha;
  eq.cycles = cycles;
  eq.constants.assign(cycles.size() + 1, GroupWord{});
  eq.constants.back() = inverse(target);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    eq.variables.push_back("x" + std::to_string(i + 1));
  }
  return eq;
}

GroupWord instantiate(const ExponentEquation& eq, const Assignment& x) {
  const auto slots = eq.variable_slots();
  GroupWord w = eq.constants.front();
  for (std::size_t i = 0; i < eq.k(); ++i) {
    append_power(w, eq.cycles[i], x.at(slots[i]));
    w.insert(w.end(), eq.constants[i + 1].begin(), eq.constants[i + 1].end());
  }
  return w;
}

bool satisfies(const ExponentEquation& eq, const Assignment& x) {
  return is_identity(instantiate(eq, x), eq.alphabet);
}

}  // namespace raag
