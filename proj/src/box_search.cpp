#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <utility>

#include <boost/container_hash/hash.hpp>

#include "raag/knapsack.hpp"

namespace raag {

namespace {

// Permutations of at most 16 points packed four bits per point.
using Packed = std::uint64_t;

struct Perm {
  int degree = 0;
  std::array<std::uint8_t, 16> map{};

  static Perm identity(int degree) {
    Perm p;
    p.degree = degree;
    for (int i = 0; i < degree; ++i) {
      p.map[i] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  // Apply *this first, then q.
  Perm then(const Perm& q) const {
    Perm r;
    r.degree = degree;
    for (int i = 0; i < degree; ++i) {
      r.map[i] = q.map[map[i]];
    }
    return r;
  }

  Perm inverted() const {
    Perm r;
    r.degree = degree;
    for (int i = 0; i < degree; ++i) {
      r.map[map[i]] = static_cast<std::uint8_t>(i);
    }
    return r;
  }

  Packed pack() const {
    Packed v = 0;
    for (int i = 0; i < degree; ++i) {
      v |= static_cast<Packed>(map[i]) << (4 * i);
    }
    return v;
  }
};

// A homomorphism into a symmetric group that kills every generator outside
// a set of pairwise non-commuting generators, together with the images of
// all suffixes of the equation where there are few enough of them.
struct Image {
  std::vector<Perm> letter;
  std::vector<Perm> letter_inverse;
  std::vector<Perm> cycle;
  std::vector<Perm> constant;
  // reach[i]: sorted images of g_i^x_i h_{i+1} ... h_k over the box, or
  // nullopt when that set grew past the limit.
  std::vector<std::optional<std::vector<Packed>>> reach;

  Perm of(const GroupWord& w) const {
    Perm p = Perm::identity(letter.front().degree);
    for (const auto& x : w) {
      p = p.then(x.inverse ? letter_inverse[x.gen] : letter[x.gen]);
    }
    return p;
  }

  // Can prefix * r = 1 for some suffix r of level i?
  bool admits(std::size_t i, const Perm& prefix) const {
    const auto& level = reach[i];
    if (!level) {
      return true;
    }
    return std::binary_search(level->begin(), level->end(),
                              prefix.inverted().pack());
  }
};

constexpr std::size_t kMaxProjectionAlphabet = 12;

std::vector<std::vector<int>> maximal_free_sets(const IndependenceAlphabet& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> sets;
  if (n > kMaxProjectionAlphabet) {
    return sets;
  }
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1U << n); ++m) {
    bool free = true;
    for (std::size_t i = 0; i < n && free; ++i) {
      for (std::size_t j = i + 1; j < n && free; ++j) {
        free = !((m >> i & 1U) && (m >> j & 1U) &&
                 a.independent(static_cast<int>(i), static_cast<int>(j)));
      }
    }
    if (free) {
      masks.push_back(m);
    }
  }
  for (unsigned m : masks) {
    const bool maximal = std::none_of(masks.begin(), masks.end(), [m](unsigned o) {
      return o != m && (o & m) == m;
    });
    if (maximal) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) {
          s.push_back(static_cast<int>(i));
        }
      }
      sets.push_back(std::move(s));
    }
  }
  return sets;
}

struct ImageSpec {
  int degree;
  std::size_t limit;
};

// Small images saturate but cover every level; the large one is nearly
// faithful on the deep levels.
constexpr std::array<ImageSpec, 3> kImageSpecs{
    {{7, 5040}, {7, 5040}, {16, std::size_t{1} << 17}}};

void fill_reach(Image& img, const ExponentEquation& eq,
                const std::vector<std::int64_t>& budget, std::size_t limit) {
  const std::size_t k = eq.k();
  img.reach.assign(k + 1, std::nullopt);
  std::vector<Packed> level{Perm::identity(img.letter.front().degree).pack()};
  std::vector<Perm> current{Perm::identity(img.letter.front().degree)};
  img.reach[k] = level;
  for (std::size_t i = k; i-- > 0;) {
    if (current.size() * static_cast<std::size_t>(budget[i] + 1) > 4 * limit) {
      return;
    }
    std::vector<std::pair<Packed, Perm>> next;
    next.reserve(current.size() * static_cast<std::size_t>(budget[i] + 1));
    for (const Perm& s : current) {
      Perm p = img.constant[i + 1].then(s);
      for (std::int64_t e = 0; e <= budget[i]; ++e) {
        next.emplace_back(p.pack(), p);
        p = img.cycle[i].then(p);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const auto& u, const auto& v) {
                             return u.first == v.first;
                           }),
               next.end());
    if (next.size() > limit) {
      return;
    }
    std::vector<Packed> sorted;
    current.clear();
    for (const auto& [key, perm] : next) {
      sorted.push_back(key);
      current.push_back(perm);
    }
    img.reach[i] = std::move(sorted);
  }
}

std::vector<Image> make_images(const ExponentEquation& eq,
                               const std::vector<std::int64_t>& budget) {
  std::mt19937 rng(20160908);
  std::vector<Image> images;
  const auto& alpha = eq.alphabet;
  for (const auto& set : maximal_free_sets(alpha)) {
    for (const auto& spec : kImageSpecs) {
      Image img;
      img.letter.assign(alpha.size(), Perm::identity(spec.degree));
      for (int g : set) {
        Perm p = Perm::identity(spec.degree);
        std::shuffle(p.map.begin(), p.map.begin() + spec.degree, rng);
        img.letter[g] = p;
      }
      for (const auto& p : img.letter) {
        img.letter_inverse.push_back(p.inverted());
      }
      for (const auto& w : eq.cycles) {
        img.cycle.push_back(img.of(w));
      }
      for (const auto& w : eq.constants) {
        img.constant.push_back(img.of(w));
      }
      fill_reach(img, eq, budget, spec.limit);
      images.push_back(std::move(img));
    }
  }
  return images;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

class BoxSearch {
 public:
  BoxSearch(const ExponentEquation& eq, const std::vector<std::int64_t>& budget,
            std::size_t node_cap)
      : eq_(eq),
        budget_(budget),
        node_cap_(node_cap),
        images_(make_images(eq, budget)),
        failed_(eq.k() + 1) {
    const std::size_t k = eq.k();
    rest_length_.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
      rest_length_[i] =
          rest_length_[i + 1] +
          budget[i] * static_cast<std::int64_t>(eq.cycles[i].size()) +
          static_cast<std::int64_t>(eq.constants[i + 1].size());
    }
  }

  std::size_t nodes() const { return nodes_; }

  std::optional<Assignment> run() {
    GroupWord start;
    append_reduced(start, eq_.constants.front(), eq_.alphabet);
    std::vector<Perm> perms;
    for (const auto& img : images_) {
      perms.push_back(img.constant.front());
    }
    Assignment x(eq_.k(), 0);
    if (visit(0, start, perms, x)) {
      return x;
    }
    return std::nullopt;
  }

 private:
  // `prefix` is h_0 g_0^x_0 ... h_i, reduced.
  bool visit(std::size_t i, const GroupWord& prefix,
             const std::vector<Perm>& perms, Assignment& x) {
    const std::size_t k = eq_.k();
    if (i == k) {
      return prefix.empty();
    }
    if (++nodes_ > node_cap_) {
      throw ResourceExhausted("box search node cap reached");
    }
    auto key = canonical_key(canonical_form(prefix, eq_.alphabet));
    if (failed_[i].count(key) > 0) {
      return false;
    }
    GroupWord g = prefix;
    std::vector<Perm> p = perms;
    for (std::int64_t e = 0; e <= budget_[i]; ++e) {
      if (e > 0) {
        append_reduced(g, eq_.cycles[i], eq_.alphabet);
        for (std::size_t m = 0; m < images_.size(); ++m) {
          p[m] = p[m].then(images_[m].cycle[i]);
        }
      }
      std::vector<Perm> q = p;
      for (std::size_t m = 0; m < images_.size(); ++m) {
        q[m] = q[m].then(images_[m].constant[i + 1]);
      }
      if (!feasible(i + 1, g, q)) {
        continue;
      }
      GroupWord next = g;
      append_reduced(next, eq_.constants[i + 1], eq_.alphabet);
      x[i] = e;
      if (visit(i + 1, next, q, x)) {
        return true;
      }
    }
    x[i] = 0;
    failed_[i].insert(std::move(key));
    return false;
  }

  // g h_i r = 1 must be possible for a suffix r of level i; `q` holds the
  // images of g h_i.
  bool feasible(std::size_t i, const GroupWord& g,
                const std::vector<Perm>& q) const {
    if (static_cast<std::int64_t>(g.size()) >
        rest_length_[i] + static_cast<std::int64_t>(eq_.constants[i].size())) {
      return false;
    }
    for (std::size_t m = 0; m < images_.size(); ++m) {
      if (!images_[m].admits(i, q[m])) {
        return false;
      }
    }
    return true;
  }

  const ExponentEquation& eq_;
  const std::vector<std::int64_t>& budget_;
  std::size_t node_cap_;
  std::vector<Image> images_;
  std::vector<std::int64_t> rest_length_;
  std::vector<std::unordered_set<std::vector<int>, KeyHash>> failed_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<Assignment> search_box(const ExponentEquation& eq,
                                     const std::vector<std::int64_t>& budget,
                                     std::size_t node_cap,
                                     std::size_t* nodes) {
  validate_equation(eq);
  if (!eq.knapsack_shape()) {
    throw InvalidInput("box search needs pairwise distinct variables");
  }
  if (budget.size() != eq.k() ||
      std::any_of(budget.begin(), budget.end(),
                  [](std::int64_t b) { return b < 0; })) {
    throw InvalidInput("one nonnegative budget per cycle expected");
  }
  BoxSearch search(eq, budget, node_cap);
  auto x = search.run();
  if (nodes != nullptr) {
    *nodes = search.nodes();
  }
  if (x && !satisfies(eq, *x)) {
    throw std::logic_error("box search produced an invalid assignment");
  }
  return x;
}

std::optional<Assignment> solve_within(const ExponentEquation& eq,
                                       std::int64_t B, std::size_t node_cap) {
  return search_box(eq, std::vector<std::int64_t>(eq.k(), B), node_cap);
}

}  // namespace raag
