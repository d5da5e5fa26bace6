#include "raag/semilinear.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "raag/alphabet.hpp"

namespace raag {

IntVector zero_vector(std::size_t k) { return IntVector(k, 0); }

IntVector unit_vector(std::size_t k, std::size_t i) {
  IntVector e(k, 0);
  e.at(i) = 1;
  return e;
}

IntVector operator+(const IntVector& x, const IntVector& y) {
  IntVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i] + y.at(i);
  }
  return z;
}

IntVector operator-(const IntVector& x, const IntVector& y) {
  IntVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i] - y.at(i);
  }
  return z;
}

IntVector scaled(const IntVector& x, const BigInt& c) {
  IntVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i] * c;
  }
  return z;
}

BigInt dot(const IntVector& x, const IntVector& y) {
  BigInt s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * y.at(i);
  }
  return s;
}

BigInt max_norm(const IntVector& x) {
  BigInt m = 0;
  for (const auto& v : x) {
    m = std::max<BigInt>(m, abs(v));
  }
  return m;
}

BigInt l1_norm(const IntVector& x) {
  BigInt s = 0;
  for (const auto& v : x) {
    s += abs(v);
  }
  return s;
}

bool is_zero(const IntVector& x) {
  return std::all_of(x.begin(), x.end(), [](const BigInt& v) { return v == 0; });
}

bool is_nonnegative(const IntVector& x) {
  return std::all_of(x.begin(), x.end(), [](const BigInt& v) { return v >= 0; });
}

bool dominated_by(const IntVector& x, const IntVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y.at(i)) {
      return false;
    }
  }
  return true;
}

std::string to_string(const IntVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += x[i].str();
  }
  return s + ")";
}

SemilinearSet full_orthant(std::size_t k) {
  SemilinearSet s;
  s.dim = k;
  LinearSet l;
  l.base = zero_vector(k);
  for (std::size_t i = 0; i < k; ++i) {
    l.periods.push_back(unit_vector(k, i));
  }
  s.components.push_back(std::move(l));
  return s;
}

SemilinearSet normalized(SemilinearSet s) {
  for (auto& c : s.components) {
    auto& p = c.periods;
    p.erase(std::remove_if(p.begin(), p.end(),
                           [](const IntVector& v) { return is_zero(v); }),
            p.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  std::sort(s.components.begin(), s.components.end(),
            [](const LinearSet& a, const LinearSet& b) {
              return std::tie(a.base, a.periods) < std::tie(b.base, b.periods);
            });
  s.components.erase(std::unique(s.components.begin(), s.components.end()),
                     s.components.end());
  return s;
}

BigInt magnitude(const SemilinearSet& s) {
  BigInt m = 0;
  for (const auto& c : s.components) {
    m = std::max(m, max_norm(c.base));
    for (const auto& p : c.periods) {
      m = std::max(m, max_norm(p));
    }
  }
  return m;
}

namespace {

// Can rest be written as a nonnegative combination of periods[i..]?
bool combination_exists(const std::vector<IntVector>& periods, std::size_t i,
                        const IntVector& rest,
                        std::set<std::pair<std::size_t, IntVector>>& failed) {
  if (is_zero(rest)) {
    return true;
  }
  if (i == periods.size()) {
    return false;
  }
  if (failed.count({i, rest}) != 0) {
    return false;
  }
  IntVector r = rest;
  while (true) {
    if (combination_exists(periods, i + 1, r, failed)) {
      return true;
    }
    r = r - periods[i];
    if (!is_nonnegative(r)) {
      break;
    }
  }
  failed.insert({i, rest});
  return false;
}

}  // namespace

bool semilinear_member(const SemilinearSet& s, const IntVector& x) {
  for (const auto& c : s.components) {
    IntVector rest = x - c.base;
    if (!is_nonnegative(rest)) {
      continue;
    }
    std::vector<IntVector> periods;
    for (const auto& p : c.periods) {
      if (!is_zero(p)) {
        periods.push_back(p);
      }
    }
    std::set<std::pair<std::size_t, IntVector>> failed;
    if (combination_exists(periods, 0, rest, failed)) {
      return true;
    }
  }
  return false;
}

std::optional<std::vector<IntVector>> members_within_capped(
    const SemilinearSet& s, const BigInt& bound, std::size_t cap) {
  // Per component so periods of one component are not applied to another.
  std::set<IntVector> out;
  for (const auto& c : s.components) {
    if (max_norm(c.base) > bound) {
      continue;
    }
    std::set<IntVector> local{c.base};
    std::vector<IntVector> queue{c.base};
    while (!queue.empty()) {
      IntVector x = std::move(queue.back());
      queue.pop_back();
      for (const auto& p : c.periods) {
        if (is_zero(p)) {
          continue;
        }
        IntVector y = x + p;
        if (max_norm(y) <= bound && local.insert(y).second) {
          if (local.size() > cap) {
            return std::nullopt;
          }
          queue.push_back(std::move(y));
        }
      }
    }
    out.insert(local.begin(), local.end());
    if (out.size() > cap) {
      return std::nullopt;
    }
  }
  return std::vector<IntVector>(out.begin(), out.end());
}

std::vector<IntVector> members_within(const SemilinearSet& s,
                                      const BigInt& bound) {
  return *members_within_capped(s, bound, static_cast<std::size_t>(-1));
}

SemilinearSet minkowski_sum(const SemilinearSet& a, const SemilinearSet& b) {
  SemilinearSet s;
  s.dim = a.dim;
  for (const auto& x : a.components) {
    for (const auto& y : b.components) {
      LinearSet l;
      l.base = x.base + y.base;
      l.periods = x.periods;
      l.periods.insert(l.periods.end(), y.periods.begin(), y.periods.end());
      s.components.push_back(std::move(l));
    }
  }
  return normalized(std::move(s));
}

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b) {
  SemilinearSet s = a;
  s.dim = std::max(a.dim, b.dim);
  s.components.insert(s.components.end(), b.components.begin(),
                      b.components.end());
  return normalized(std::move(s));
}

// ---------------------------------------------------------------------------
// Minimal solutions of a single linear equation

namespace {

using Small = std::vector<std::int64_t>;

std::int64_t to_small(const BigInt& v) {
  if (v > BigInt(INT64_MAX / 4) || v < BigInt(INT64_MIN / 4)) {
    throw InvalidInput("coefficient too large for minimal solution search");
  }
  return static_cast<std::int64_t>(v);
}

bool small_dominates(const Small& m, const Small& y) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > y[i]) {
      return false;
    }
  }
  return true;
}

// Level-by-level completion for a.x = 0.  When bounded_last is set the last
// coordinate never exceeds 1.
std::vector<Small> completion(const Small& a, bool bounded_last) {
  const std::size_t d = a.size();
  std::vector<Small> minimal;
  std::set<Small> level;
  for (std::size_t j = 0; j < d; ++j) {
    Small e(d, 0);
    e[j] = 1;
    level.insert(e);
  }
  while (!level.empty()) {
    std::vector<Small> open;
    for (const auto& x : level) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        s += a[j] * x[j];
      }
      if (s == 0) {
        minimal.push_back(x);
      } else {
        open.push_back(x);
      }
    }
    std::set<Small> next;
    for (const auto& x : open) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        s += a[j] * x[j];
      }
      for (std::size_t j = 0; j < d; ++j) {
        if ((s > 0 && a[j] >= 0) || (s < 0 && a[j] <= 0)) {
          continue;
        }
        Small y = x;
        ++y[j];
        if (bounded_last && y[d - 1] > 1) {
          continue;
        }
        const bool covered = std::any_of(
            minimal.begin(), minimal.end(),
            [&](const Small& m) { return small_dominates(m, y); });
        if (!covered) {
          next.insert(std::move(y));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

IntVector to_big(const Small& x, std::size_t k) {
  IntVector v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = x[i];
  }
  return v;
}

}  // namespace

std::vector<IntVector> minimal_solutions_homogeneous(const IntVector& u) {
  Small a;
  for (const auto& v : u) {
    a.push_back(to_small(v));
  }
  std::vector<IntVector> out;
  if (a.empty()) {
    return out;
  }
  for (const auto& x : completion(a, false)) {
    out.push_back(to_big(x, u.size()));
  }
  return out;
}

std::vector<IntVector> minimal_solutions_inhom(const IntVector& u,
                                               const BigInt& b) {
  if (b == 0) {
    return {zero_vector(u.size())};
  }
  Small a;
  for (const auto& v : u) {
    a.push_back(to_small(v));
  }
  a.push_back(-to_small(b));
  std::vector<IntVector> out;
  for (const auto& x : completion(a, true)) {
    if (x.back() == 1) {
      out.push_back(to_big(x, u.size()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> minimal_solutions_enumerated(const IntVector& u,
                                                    const BigInt& b,
                                                    long radius,
                                                    bool nonzero) {
  const std::size_t k = u.size();
  std::vector<IntVector> sols;
  IntVector x(k, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == k) {
      if (dot(u, x) == b && !(nonzero && is_zero(x))) {
        sols.push_back(x);
      }
      return;
    }
    for (long v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
    x[i] = 0;
  };
  rec(0, radius);
  std::vector<IntVector> minimal;
  for (const auto& s : sols) {
    const bool has_smaller = std::any_of(
        sols.begin(), sols.end(),
        [&](const IntVector& t) { return t != s && dominated_by(t, s); });
    if (!has_smaller) {
      minimal.push_back(s);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

SemilinearSet decompose_hyperplane_solutions(const IntVector& u,
                                             const BigInt& b) {
  SemilinearSet s;
  s.dim = u.size();
  const auto periods = minimal_solutions_homogeneous(u);
  for (auto& base : minimal_solutions_inhom(u, b)) {
    s.components.push_back({std::move(base), periods});
  }
  return normalized(std::move(s));
}

namespace {

// All x in N^k with Sx = y, where S groups coordinates by coefficient value.
std::vector<IntVector> fiber(const IntVector& u, const IntVector& y,
                             const BigInt& M) {
  const std::size_t k = u.size();
  // Coordinates of u grouped by value index (value + M).
  std::map<long, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < k; ++j) {
    groups[static_cast<long>(u[j] + M)].push_back(j);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && groups.count(static_cast<long>(i)) == 0) {
      return {};
    }
  }
  std::vector<IntVector> out{zero_vector(k)};
  for (const auto& [value_index, coords] : groups) {
    const long total = static_cast<long>(y.at(value_index));
    std::vector<IntVector> next;
    for (const auto& partial : out) {
      // Distribute `total` over coords.
      IntVector x = partial;
      std::function<void(std::size_t, long)> rec = [&](std::size_t c,
                                                        long left) {
        if (c + 1 == coords.size()) {
          x[coords[c]] = left;
          next.push_back(x);
          return;
        }
        for (long v = 0; v <= left; ++v) {
          x[coords[c]] = v;
          rec(c + 1, left - v);
        }
      };
      rec(0, total);
    }
    out = std::move(next);
  }
  return out;
}

struct OnedimCache {
  std::mutex mutex;
  std::map<std::pair<long, BigInt>, SemilinearSet> entries;
};

OnedimCache& onedim_cache() {
  static OnedimCache cache;
  return cache;
}

SemilinearSet value_decomposition(long M, const BigInt& b) {
  auto& cache = onedim_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find({M, b});
    if (it != cache.entries.end()) {
      return it->second;
    }
  }
  IntVector v;
  for (long i = -M; i <= M; ++i) {
    v.push_back(i);
  }
  SemilinearSet s = decompose_hyperplane_solutions(v, b);
  std::lock_guard<std::mutex> lock(cache.mutex);
  cache.entries.emplace(std::make_pair(M, b), s);
  return s;
}

}  // namespace

SemilinearSet decompose_onedim_bounded(const IntVector& u, const BigInt& b,
                                       const BigInt& M) {
  if (max_norm(u) > M || abs(b) > M) {
    throw InvalidInput("coefficients exceed the declared bound");
  }
  if (M > 1000) {
    throw InvalidInput("bound too large for the value decomposition");
  }
  const long m = static_cast<long>(M);
  const SemilinearSet values = value_decomposition(m, b);
  SemilinearSet s;
  s.dim = u.size();
  std::vector<IntVector> periods;
  if (!values.components.empty()) {
    for (const auto& d : values.components.front().periods) {
      for (auto& x : fiber(u, d, M)) {
        periods.push_back(std::move(x));
      }
    }
  }
  for (const auto& c : values.components) {
    for (auto& x : fiber(u, c.base, M)) {
      s.components.push_back({std::move(x), periods});
    }
  }
  return normalized(std::move(s));
}

BigInt intersection_magnitude_bound(const BigInt& M, const BigInt& m,
                                    std::size_t k) {
  const BigInt t = m + BigInt(k) * m * M;
  return 2 * M + M * t * (t + 2);
}

SemilinearSet intersect_linear_with_hyperplane(const LinearSet& L,
                                               const IntVector& u,
                                               const BigInt& b,
                                               const BigInt& m) {
  if (max_norm(u) > m || abs(b) > m) {
    throw InvalidInput("hyperplane exceeds the declared bound");
  }
  const std::size_t k = u.size();
  const std::size_t n = L.periods.size();
  IntVector coeff(n);
  for (std::size_t j = 0; j < n; ++j) {
    coeff[j] = dot(u, L.periods[j]);
  }
  const BigInt rhs = b - dot(u, L.base);
  SemilinearSet s;
  s.dim = k;
  if (n == 0) {
    if (rhs == 0) {
      s.components.push_back({L.base, {}});
    }
    return s;
  }
  const SemilinearSet U = decompose_hyperplane_solutions(coeff, rhs);
  auto image = [&](const IntVector& y) {
    IntVector x = zero_vector(k);
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] != 0) {
        x = x + scaled(L.periods[j], y[j]);
      }
    }
    return x;
  };
  for (const auto& c : U.components) {
    LinearSet l;
    l.base = L.base + image(c.base);
    for (const auto& d : c.periods) {
      l.periods.push_back(image(d));
    }
    s.components.push_back(std::move(l));
  }
  return normalized(std::move(s));
}

SemilinearSet intersect_with_hyperplane(const SemilinearSet& s,
                                        const IntVector& u, const BigInt& b) {
  const BigInt m = std::max(max_norm(u), BigInt(abs(b)));
  SemilinearSet out;
  out.dim = s.dim;
  for (const auto& c : s.components) {
    const SemilinearSet part = intersect_linear_with_hyperplane(c, u, b, m);
    out.components.insert(out.components.end(), part.components.begin(),
                          part.components.end());
  }
  return normalized(std::move(out));
}

}  // namespace raag
