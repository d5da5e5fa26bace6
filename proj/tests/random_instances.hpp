// Seeded generators shared by the unit tests and the acceptance run.
#ifndef RAAG_TESTS_RANDOM_INSTANCES_HPP_
#define RAAG_TESTS_RANDOM_INSTANCES_HPP_

#include <algorithm>
#include <random>

#include "raag/automata.hpp"
#include "raag/equation.hpp"

namespace raag::testing {

inline GroupWord random_word(std::mt19937& rng, std::size_t gens,
                             std::size_t max_len) {
  GroupWord w(rng() % (max_len + 1));
  for (auto& x : w) {
    x = {static_cast<int>(rng() % gens), rng() % 2 == 1};
  }
  return w;
}

// Acyclic automaton on states 0..n-1 with forward transitions only; the
// last state is always final.
inline WordAutomaton random_acyclic(std::mt19937& rng, std::size_t gens,
                                    int max_states, int max_transitions,
                                    std::size_t max_label) {
  WordAutomaton a;
  a.states = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_states - 1));
  a.finals = {a.states - 1};
  if (rng() % 3 == 0) {
    a.finals.push_back(static_cast<int>(rng() % static_cast<unsigned>(a.states)));
  }
  std::sort(a.finals.begin(), a.finals.end());
  a.finals.erase(std::unique(a.finals.begin(), a.finals.end()), a.finals.end());
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_transitions));
  for (int t = 0; t < m; ++t) {
    const int p = static_cast<int>(rng() % static_cast<unsigned>(a.states - 1));
    const int q = p + 1 + static_cast<int>(rng() % static_cast<unsigned>(a.states - 1 - p));
    a.transitions.push_back({p, q, random_word(rng, gens, max_label)});
  }
  return a;
}

inline ExponentEquation random_knapsack(std::mt19937& rng,
                                        const IndependenceAlphabet& alpha,
                                        std::size_t max_k, std::size_t max_len) {
  const std::size_t k = 1 + rng() % max_k;
  ExponentEquation eq;
  eq.alphabet = alpha;
  for (std::size_t i = 0; i <= k; ++i) {
    eq.constants.push_back(random_word(rng, alpha.size(), max_len));
    if (i < k) {
      GroupWord g;
      while (g.empty()) {
        g = random_word(rng, alpha.size(), max_len);
      }
      eq.cycles.push_back(g);
      eq.variables.push_back("x" + std::to_string(i + 1));
    }
  }
  return eq;
}

}  // namespace raag::testing

#endif  // RAAG_TESTS_RANDOM_INSTANCES_HPP_
