// Shared fixtures and independent oracles for the test binaries.  Nothing
// here calls the solver code paths being checked.
#ifndef RAAG_TESTS_SUPPORT_HPP_
#define RAAG_TESTS_SUPPORT_HPP_

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "raag/alphabet.hpp"
#include "raag/equation.hpp"
#include "raag/group.hpp"
#include "raag/trace.hpp"

namespace raag::testing {

inline IndependenceAlphabet make_alphabet(
    const std::vector<std::string>& gens,
    const std::vector<std::pair<std::string, std::string>>& edges = {}) {
  return validate_alphabet(gens, edges);
}

inline IndependenceAlphabet p4() {
  return make_alphabet({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}
inline IndependenceAlphabet c4() {
  return make_alphabet({"a", "b", "c", "d"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}
inline IndependenceAlphabet free2() { return make_alphabet({"a", "b"}); }
inline IndependenceAlphabet z2() {
  return make_alphabet({"a", "b"}, {{"a", "b"}});
}

// "a b^-1 c" style; the empty string is the empty word.
inline GroupWord word(const IndependenceAlphabet& alpha, const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> names;
  for (std::string t; in >> t;) {
    names.push_back(t);
  }
  return parse_group_word(names, alpha);
}

inline MonoidWord mword(const IndependenceAlphabet& alpha, const std::string& s) {
  std::vector<std::string> names;
  for (char ch : s) {
    names.emplace_back(1, ch);
  }
  return parse_monoid_word(names, alpha);
}

// Alphabet on n vertices named a, b, ... from an edge bitmask over the
// pairs (i, j), i < j, in lexicographic order.
inline IndependenceAlphabet graph_from_mask(int n, std::uint32_t mask) {
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) {
    gens.emplace_back(1, static_cast<char>('a' + i));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) {
        edges.emplace_back(gens[i], gens[j]);
      }
    }
  }
  return validate_alphabet(gens, edges);
}

// Induced P4 or C4 by checking every ordered 4-tuple against the raw
// adjacency.
inline bool oracle_has_p4_or_c4(const IndependenceAlphabet& alpha) {
  const int n = static_cast<int>(alpha.size());
  auto adj = [&](int x, int y) { return alpha.independent(x, y); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) {
            continue;
          }
          const bool path = adj(a, b) && adj(b, c) && adj(c, d);
          if (!path || adj(a, c) || adj(b, d)) {
            continue;
          }
          return true;  // P4 when a-d is missing, C4 otherwise
        }
  return false;
}

// Word problem by cancelling x ... x^-1 whenever everything in between
// commutes with x.  Confluent for graph groups.
inline bool oracle_identity(GroupWord w, const IndependenceAlphabet& alpha) {
  bool changed = true;
  while (changed && !w.empty()) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].gen == w[i].gen) {
          if (w[j].inverse != w[i].inverse) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
          break;
        }
        if (!alpha.independent(w[i].gen, w[j].gen)) {
          break;
        }
      }
    }
  }
  return w.empty();
}

// Trace equality through projections onto dependent pairs and letters.
inline bool oracle_traces_equal(const MonoidWord& u, const MonoidWord& v,
                                const IndependenceAlphabet& alpha) {
  const int n = static_cast<int>(alpha.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (x != y && alpha.independent(x, y)) {
        continue;
      }
      auto keep = [&](const MonoidWord& w) {
        MonoidWord out;
        for (int g : w) {
          if (g == x || g == y) {
            out.push_back(g);
          }
        }
        return out;
      };
      if (keep(u) != keep(v)) {
        return false;
      }
    }
  }
  return true;
}

inline GroupWord oracle_instantiate(const ExponentEquation& eq,
                                    const Assignment& x) {
  const auto slots = eq.variable_slots();
  GroupWord w = eq.constants[0];
  for (std::size_t i = 0; i < eq.k(); ++i) {
    for (std::int64_t e = 0; e < x[slots[i]]; ++e) {
      w.insert(w.end(), eq.cycles[i].begin(), eq.cycles[i].end());
    }
    w.insert(w.end(), eq.constants[i + 1].begin(), eq.constants[i + 1].end());
  }
  return w;
}

// All solutions in [0, B]^vars, lexicographic.
inline std::vector<Assignment> oracle_solutions(const ExponentEquation& eq,
                                                std::int64_t B) {
  const std::size_t vars = eq.distinct_variables().size();
  std::vector<Assignment> out;
  Assignment x(vars, 0);
  while (true) {
    if (oracle_identity(oracle_instantiate(eq, x), eq.alphabet)) {
      out.push_back(x);
    }
    std::size_t i = vars;
    while (i > 0 && x[i - 1] == B) {
      x[--i] = 0;
    }
    if (i == 0) {
      return out;
    }
    ++x[i - 1];
  }
}

// Every signed word of the given length over the alphabet, in order.
inline std::vector<GroupWord> all_words(std::size_t gens, std::size_t length) {
  std::vector<GroupWord> out;
  const std::size_t letters = 2 * gens;
  std::vector<std::size_t> digits(length, 0);
  while (true) {
    GroupWord w;
    for (std::size_t d : digits) {
      w.push_back({static_cast<int>(d / 2), d % 2 == 1});
    }
    out.push_back(std::move(w));
    std::size_t i = length;
    while (i > 0 && digits[i - 1] + 1 == letters) {
      digits[--i] = 0;
    }
    if (i == 0) {
      return out;
    }
    ++digits[i - 1];
  }
}

}  // namespace raag::testing

#endif  // RAAG_TESTS_SUPPORT_HPP_
