#include <algorithm>

#include "doctest.h"
#include "raag/alphabet.hpp"
#include "semilinear_oracle.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<IntVector> bases(const SemilinearSet& s) {
  std::vector<IntVector> out;
  for (const auto& c : s.components) {
    out.push_back(c.base);
  }
  return sorted(out);
}

// Membership equals u.x = b on [0, top]^k.
void check_solution_set(const SemilinearSet& s, const Small& u, long b,
                        long top) {
  for_each_box(u.size(), top, [&](const Small& x) {
    CHECK(semilinear_member(s, big(x)) == (oracle_dot(u, x) == b));
  });
}

}  // namespace

TEST_SUITE("semilinear") {

TEST_CASE("vector helpers") {
  const IntVector x = big({1, -3, 2});
  CHECK(max_norm(x) == 3);
  CHECK(l1_norm(x) == 6);
  CHECK(dot(x, big({1, 1, 1})) == 0);
  CHECK(x + big({0, 3, 0}) == big({1, 0, 2}));
  CHECK(scaled(x, 2) == big({2, -6, 4}));
  CHECK(dominated_by(big({0, 1}), big({1, 1})));
  CHECK_FALSE(is_nonnegative(x));
  CHECK(is_zero(zero_vector(3)));
  CHECK(unit_vector(3, 1) == big({0, 1, 0}));
}

TEST_CASE("homogeneous minimal solutions") {
  CHECK(minimal_solutions_homogeneous(big({1, -1})) ==
        std::vector<IntVector>{big({1, 1})});
  CHECK(minimal_solutions_homogeneous(big({1, 1})).empty());
  CHECK(minimal_solutions_homogeneous(big({2, -3})) ==
        std::vector<IntVector>{big({3, 2})});
}

TEST_CASE("inhomogeneous minimal solutions") {
  CHECK(minimal_solutions_inhom(big({1, -2}), 1) ==
        std::vector<IntVector>{big({1, 0})});
  CHECK(minimal_solutions_inhom(big({1}), 0) == std::vector<IntVector>{big({0})});
  CHECK(minimal_solutions_inhom(big({2}), 1).empty());
}

TEST_CASE("minimal solutions agree with enumeration for k = 2") {
  for (long u0 = -4; u0 <= 4; ++u0) {
    for (long u1 = -4; u1 <= 4; ++u1) {
      const Small u{u0, u1};
      const long l1 = std::abs(u0) + std::abs(u1);
      CHECK(sorted(minimal_solutions_homogeneous(big(u))) ==
            oracle_minimal(u, 0, 1 + l1, true));
      for (long b = -4; b <= 4; ++b) {
        const auto inhom = sorted(minimal_solutions_inhom(big(u), b));
        CHECK(inhom == oracle_minimal(u, b, 1 + l1 + std::abs(b), false));
        CHECK(sorted(minimal_solutions_enumerated(big(u), b, 1 + l1 + std::abs(b),
                                                  false)) == inhom);
      }
    }
  }
}

TEST_CASE("hyperplane decompositions") {
  const auto a = decompose_hyperplane_solutions(big({1, -1}), 0);
  REQUIRE(a.components.size() == 1);
  CHECK(a.components[0].base == big({0, 0}));
  CHECK(a.components[0].periods == std::vector<IntVector>{big({1, 1})});

  const auto b = decompose_hyperplane_solutions(big({1, -1}), 1);
  CHECK(bases(b) == std::vector<IntVector>{big({1, 0})});
  check_solution_set(b, {1, -1}, 1, 5);

  const auto c = decompose_hyperplane_solutions(big({1, 1}), 2);
  CHECK(bases(c) == std::vector<IntVector>{big({0, 2}), big({1, 1}), big({2, 0})});
  for (const auto& comp : c.components) {
    CHECK(comp.periods.empty());
  }

  const auto d = decompose_onedim_bounded(big({1, -1}), 0, 1);
  check_solution_set(d, {1, -1}, 0, 6);
  for (const auto& comp : d.components) {
    CHECK(l1_norm(comp.base) <= 4);
    for (const auto& p : comp.periods) {
      CHECK(l1_norm(p) <= 4);
    }
  }
  const auto e = decompose_onedim_bounded(big({0}), 0, 0);
  CHECK(semilinear_member(e, big({17})));
  CHECK(bases(decompose_onedim_bounded(big({1, 1}), 2, 2)) ==
        std::vector<IntVector>{big({0, 2}), big({1, 1}), big({2, 0})});
  CHECK_THROWS_AS(decompose_onedim_bounded(big({3}), 0, 2), InvalidInput);
}

TEST_CASE("decompositions are exact for k = 2") {
  for (long u0 = -3; u0 <= 3; ++u0) {
    for (long u1 = -3; u1 <= 3; ++u1) {
      for (long b = -3; b <= 3; ++b) {
        const Small u{u0, u1};
        check_solution_set(decompose_hyperplane_solutions(big(u), b), u, b, 7);
        const long M = std::max({std::abs(u0), std::abs(u1), std::abs(b)});
        check_solution_set(decompose_onedim_bounded(big(u), b, M), u, b, 7);
      }
    }
  }
}

TEST_CASE("intersection with a hyperplane") {
  const LinearSet orthant{big({0, 0}), {big({1, 0}), big({0, 1})}};
  const auto a = intersect_linear_with_hyperplane(orthant, big({1, 1}), 2, 2);
  check_solution_set(a, {1, 1}, 2, 8);
  CHECK(magnitude(a) == 2);

  const auto b = intersect_linear_with_hyperplane(
      LinearSet{big({1, 1}), {}}, big({1, -1}), 0, 1);
  CHECK(semilinear_member(b, big({1, 1})));
  CHECK(bases(b) == std::vector<IntVector>{big({1, 1})});

  const auto c = intersect_linear_with_hyperplane(
      LinearSet{big({0, 0}), {big({2, 0})}}, big({1, 0}), 3, 3);
  CHECK(c.empty());

  // Magnitude stays under 2M + M(m+kmM)(m+kmM+2) on a small sweep.
  const LinearSet L{big({1, 0, 2}), {big({1, 1, 0}), big({0, 2, 1})}};
  for (long u0 = -2; u0 <= 2; ++u0) {
    for (long u2 = -2; u2 <= 2; ++u2) {
      for (long rhs = -2; rhs <= 2; ++rhs) {
        const IntVector u = big({u0, 1, u2});
        const auto s = intersect_linear_with_hyperplane(L, u, rhs, 2);
        CHECK(magnitude(s) <= intersection_magnitude_bound(2, 2, 3));
        for_each_box(2, 6, [&](const Small& y) {
          const IntVector x = L.base + scaled(L.periods[0], y[0]) +
                              scaled(L.periods[1], y[1]);
          CHECK(semilinear_member(s, x) == (dot(u, x) == rhs));
        });
      }
    }
  }
}

TEST_CASE("membership and magnitude") {
  const SemilinearSet diag{2, {LinearSet{big({0, 0}), {big({1, 1})}}}};
  CHECK(semilinear_member(diag, big({3, 3})));
  CHECK_FALSE(semilinear_member(diag, big({2, 3})));
  SemilinearSet with_zero = diag;
  with_zero.components[0].periods.push_back(big({0, 0}));
  CHECK(semilinear_member(with_zero, big({3, 3})));
  CHECK_FALSE(semilinear_member(with_zero, big({2, 3})));
  CHECK(normalized(with_zero) == normalized(diag));

  CHECK(magnitude(diag) == 1);
  CHECK(magnitude(SemilinearSet{2, {LinearSet{big({2, 0}), {big({0, 3})}}}}) == 3);
  CHECK(magnitude(SemilinearSet{2, {}}) == 0);

  CHECK(members_within(diag, 2) ==
        std::vector<IntVector>{big({0, 0}), big({1, 1}), big({2, 2})});
  CHECK_FALSE(members_within_capped(full_orthant(2), 3, 5).has_value());

  const auto sum = minkowski_sum(diag, SemilinearSet{2, {LinearSet{big({1, 0}), {}}}});
  CHECK(semilinear_member(sum, big({3, 2})));
  CHECK_FALSE(semilinear_member(sum, big({2, 2})));
  const auto both = set_union(diag, SemilinearSet{2, {LinearSet{big({1, 0}), {}}}});
  CHECK(semilinear_member(both, big({1, 0})));
  CHECK(semilinear_member(both, big({4, 4})));
}

}  // TEST_SUITE
