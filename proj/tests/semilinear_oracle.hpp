// Brute-force references for the semilinear tests and the acceptance run.
#ifndef RAAG_TESTS_SEMILINEAR_ORACLE_HPP_
#define RAAG_TESTS_SEMILINEAR_ORACLE_HPP_

#include <algorithm>
#include <vector>

#include "raag/semilinear.hpp"

namespace raag::testing {

using Small = std::vector<long>;

inline IntVector big(const Small& v) {
  IntVector out;
  for (long x : v) {
    out.emplace_back(x);
  }
  return out;
}

// Calls f on every x in [0, top]^k.
template <class F>
void for_each_box(std::size_t k, long top, F f) {
  Small x(k, 0);
  while (true) {
    f(x);
    std::size_t i = k;
    while (i > 0 && x[i - 1] == top) {
      x[--i] = 0;
    }
    if (i == 0) {
      return;
    }
    ++x[i - 1];
  }
}

inline long oracle_dot(const Small& u, const Small& x) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    s += u[i] * x[i];
  }
  return s;
}

// Minimal solutions of u.x = b among x in [0, top]^k (zero excluded when
// nonzero is set), sorted.
inline std::vector<IntVector> oracle_minimal(const Small& u, long b, long top,
                                            bool nonzero) {
  std::vector<Small> sols;
  for_each_box(u.size(), top, [&](const Small& x) {
    const bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
    if (oracle_dot(u, x) == b && !(nonzero && zero)) {
      sols.push_back(x);
    }
  });
  std::vector<IntVector> out;
  for (const auto& x : sols) {
    bool minimal = true;
    for (const auto& y : sols) {
      if (y != x && std::equal(y.begin(), y.end(), x.begin(),
                               [](long a, long c) { return a <= c; })) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(big(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace raag::testing

#endif  // RAAG_TESTS_SEMILINEAR_ORACLE_HPP_
