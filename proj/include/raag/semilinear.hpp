#ifndef RAAG_SEMILINEAR_HPP_
#define RAAG_SEMILINEAR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace raag {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

IntVector zero_vector(std::size_t k);
IntVector unit_vector(std::size_t k, std::size_t i);
IntVector operator+(const IntVector& x, const IntVector& y);
IntVector operator-(const IntVector& x, const IntVector& y);
IntVector scaled(const IntVector& x, const BigInt& c);
BigInt dot(const IntVector& x, const IntVector& y);
BigInt max_norm(const IntVector& x);
BigInt l1_norm(const IntVector& x);
bool is_zero(const IntVector& x);
bool is_nonnegative(const IntVector& x);
// Componentwise x <= y.
bool dominated_by(const IntVector& x, const IntVector& y);
std::string to_string(const IntVector& x);

struct LinearSet {
  IntVector base;
  std::vector<IntVector> periods;

  bool operator==(const LinearSet&) const = default;
};

struct SemilinearSet {
  std::size_t dim = 0;
  std::vector<LinearSet> components;

  bool empty() const { return components.empty(); }
  bool operator==(const SemilinearSet&) const = default;
};

// All of N^k: base 0, unit periods.
SemilinearSet full_orthant(std::size_t k);

// Drops zero periods, sorts and deduplicates periods and components.
SemilinearSet normalized(SemilinearSet s);

BigInt magnitude(const SemilinearSet& s);

bool semilinear_member(const SemilinearSet& s, const IntVector& x);

// Members with every entry <= bound, sorted.
std::vector<IntVector> members_within(const SemilinearSet& s,
                                      const BigInt& bound);

// As above, but gives up (nullopt) once more than cap members are found.
std::optional<std::vector<IntVector>> members_within_capped(
    const SemilinearSet& s, const BigInt& bound, std::size_t cap);

// x + y for x in a, y in b.
SemilinearSet minkowski_sum(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b);

// Minimal nonzero x in N^k with u.x = 0.
std::vector<IntVector> minimal_solutions_homogeneous(const IntVector& u);

// Minimal x in N^k with u.x = b.  For b = 0 this is {0}.
std::vector<IntVector> minimal_solutions_inhom(const IntVector& u,
                                               const BigInt& b);

// Minimal elements of {x : u.x = b, |x|_1 <= radius}, found by brute force.
// With nonzero set, the zero vector is excluded.
std::vector<IntVector> minimal_solutions_enumerated(const IntVector& u,
                                                    const BigInt& b,
                                                    long radius, bool nonzero);

SemilinearSet decompose_hyperplane_solutions(const IntVector& u,
                                             const BigInt& b);

// Route through v = (-M, ..., M).  Throws InvalidInput when the inputs
// exceed M.
SemilinearSet decompose_onedim_bounded(const IntVector& u, const BigInt& b,
                                       const BigInt& M);

// {x in L : u.x = b}.  Throws InvalidInput when |u|, |b| exceed m.
SemilinearSet intersect_linear_with_hyperplane(const LinearSet& L,
                                               const IntVector& u,
                                               const BigInt& b,
                                               const BigInt& m);

SemilinearSet intersect_with_hyperplane(const SemilinearSet& s,
                                        const IntVector& u, const BigInt& b);

// 2M + M(m+kmM)(m+kmM+2).
BigInt intersection_magnitude_bound(const BigInt& M, const BigInt& m,
                                    std::size_t k);

}  // namespace raag

#endif  // RAAG_SEMILINEAR_HPP_
