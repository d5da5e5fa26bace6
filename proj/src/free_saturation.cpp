// Knapsack over free groups as identity membership in the rational set
// h_0 g_1^* h_1 ... g_k^* h_k.  The relation "some path p -> q reads a word
// equal to 1" is the least relation closed under reflexivity, wrapping by an
// edge pair x, x^-1 and concatenation; it is computed by a worklist.

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "raag/knapsack.hpp"

namespace raag {

namespace {

struct Edge {
  int from;
  int to;
  Letter letter;
  int closes = -1;  // cycle index when this edge completes one traversal
};

// How a pair entered the relation.
struct Derivation {
  enum Kind { None, Reflexive, Silent, Wrapped, Joined } kind = None;
  int first = -1;   // Wrapped: incoming edge; Joined: middle state
  int second = -1;  // Wrapped: outgoing edge
  int inner_from = -1;
  int inner_to = -1;
};

class Saturation {
 public:
  explicit Saturation(const ExponentEquation& eq) : k_(eq.k()) {
    start_ = add_state();
    int at = start_;
    for (std::size_t i = 0; i <= eq.k(); ++i) {
      at = chain(at, eq.constants[i]);
      if (i == eq.k()) {
        break;
      }
      // A fresh hub keeps neighbouring loops apart when a constant is empty.
      const int hub = add_state();
      silent_.emplace_back(at, hub);
      at = hub;
      // Loop reading cycles[i] once around, anchored at `at`.
      const GroupWord& w = eq.cycles[i];
      int cur = at;
      for (std::size_t j = 0; j < w.size(); ++j) {
        const bool last = j + 1 == w.size();
        const int next = last ? at : add_state();
        edges_.push_back({cur, next, w[j], last ? static_cast<int>(i) : -1});
        cur = next;
      }
    }
    final_ = at;
    const int n = states_;
    derivation_.assign(static_cast<std::size_t>(n) * n, {});
    in_.assign(n, {});
    out_.assign(n, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      out_[edges_[e].from].push_back(e);
      in_[edges_[e].to].push_back(e);
    }
    row_.assign(n, {});
    column_.assign(n, {});
  }

  bool run() {
    for (int p = 0; p < states_; ++p) {
      add(p, p, {Derivation::Reflexive});
    }
    for (const auto& [p, q] : silent_) {
      add(p, q, {Derivation::Silent});
    }
    while (!work_.empty()) {
      const auto [p, q] = work_.front();
      work_.pop_front();
      for (int ein : in_[p]) {
        for (int eout : out_[q]) {
          const Letter x = edges_[ein].letter;
          const Letter y = edges_[eout].letter;
          if (x.gen == y.gen && x.inverse != y.inverse) {
            add(edges_[ein].from, edges_[eout].to,
                {Derivation::Wrapped, ein, eout, p, q});
          }
        }
      }
      // Copies: row_/column_ grow while we add.
      const std::vector<int> after = row_[q];
      for (int r : after) {
        add(p, r, {Derivation::Joined, q});
      }
      const std::vector<int> before = column_[p];
      for (int o : before) {
        add(o, q, {Derivation::Joined, p});
      }
    }
    return at(start_, final_).kind != Derivation::None;
  }

  // Exponents read off a witness path; call after run() returned true.
  Assignment witness() const {
    Assignment x(k_, 0);
    std::vector<std::pair<int, int>> stack{{start_, final_}};
    while (!stack.empty()) {
      const auto [p, q] = stack.back();
      stack.pop_back();
      const Derivation& d = at(p, q);
      switch (d.kind) {
        case Derivation::Reflexive:
        case Derivation::Silent:
        case Derivation::None:
          break;
        case Derivation::Wrapped:
          for (int e : {d.first, d.second}) {
            if (edges_[e].closes >= 0) {
              ++x[edges_[e].closes];
            }
          }
          stack.emplace_back(d.inner_from, d.inner_to);
          break;
        case Derivation::Joined:
          stack.emplace_back(p, d.first);
          stack.emplace_back(d.first, q);
          break;
      }
    }
    return x;
  }

 private:
  int add_state() { return states_++; }

  int chain(int from, const GroupWord& w) {
    int cur = from;
    for (const auto& x : w) {
      const int next = add_state();
      edges_.push_back({cur, next, x});
      cur = next;
    }
    return cur;
  }

  const Derivation& at(int p, int q) const {
    return derivation_[static_cast<std::size_t>(p) * states_ + q];
  }

  void add(int p, int q, Derivation d) {
    Derivation& slot = derivation_[static_cast<std::size_t>(p) * states_ + q];
    if (slot.kind != Derivation::None) {
      return;
    }
    slot = d;
    row_[p].push_back(q);
    column_[q].push_back(p);
    work_.emplace_back(p, q);
  }

  std::size_t k_;
  int states_ = 0;
  int start_ = 0;
  int final_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> silent_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<Derivation> derivation_;
  std::vector<std::vector<int>> row_;
  std::vector<std::vector<int>> column_;
  std::deque<std::pair<int, int>> work_;
};

}  // namespace

std::optional<Assignment> solve_free_group(const ExponentEquation& eq) {
  validate_equation(eq);
  if (!eq.alphabet.edges().empty()) {
    throw InvalidInput("saturation needs a free group");
  }
  if (!eq.knapsack_shape()) {
    throw InvalidInput("saturation needs pairwise distinct variables");
  }
  Saturation s(eq);
  if (!s.run()) {
    return std::nullopt;
  }
  Assignment x = s.witness();
  if (!satisfies(eq, x)) {
    throw std::logic_error("saturation produced an invalid assignment");
  }
  return x;
}

}  // namespace raag
