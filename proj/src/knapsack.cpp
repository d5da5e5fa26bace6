#include "raag/knapsack.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace raag {

// ---------------------------------------------------------------------------
// Preprocessing

Preprocessed preprocess(const ExponentEquation& eq) {
  validate_equation(eq);
  const auto& alpha = eq.alphabet;
  Preprocessed r;
  r.equation.alphabet = alpha;
  r.equation.mode = eq.mode;
  GroupWord pending = reduce_word(eq.constants.front(), alpha);
  std::vector<std::string> dropped;
  for (std::size_t i = 0; i < eq.k(); ++i) {
    GroupWord g = reduce_word(eq.cycles[i], alpha);
    if (g.empty()) {
      dropped.push_back(eq.variables[i]);
      pending = reduce_append(pending, eq.constants[i + 1], alpha);
      continue;
    }
    r.equation.constants.push_back(std::move(pending));
    r.equation.cycles.push_back(std::move(g));
    r.equation.variables.push_back(eq.variables[i]);
    r.kept.push_back(i);
    pending = reduce_word(eq.constants[i + 1], alpha);
  }
  r.equation.constants.push_back(std::move(pending));
  for (const auto& v : dropped) {
    const auto& kept_vars = r.equation.variables;
    if (std::find(kept_vars.begin(), kept_vars.end(), v) == kept_vars.end() &&
        std::find(r.free_variables.begin(), r.free_variables.end(), v) ==
            r.free_variables.end()) {
      r.free_variables.push_back(v);
    }
  }
  return r;
}

Preprocessed preprocess(const ExponentEquation& eq, const FreeSplit& split) {
  Preprocessed r = preprocess(eq);
  auto& e = r.equation;
  const auto& alpha = e.alphabet;
  for (std::size_t i = 0; i < e.k(); ++i) {
    const CyclicCore cc = cyclically_reduce(e.cycles[i], split, alpha);
    if (cc.conjugator.empty()) {
      continue;
    }
    e.constants[i] = reduce_append(e.constants[i], inverse(cc.conjugator), alpha);
    e.cycles[i] = reduce_word(cc.core, alpha);
    e.constants[i + 1] = reduce_word(concat(cc.conjugator, e.constants[i + 1]), alpha);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bounds

BigInt free_product_threshold(std::size_t n, std::size_t k) {
  const BigInt N = n;
  const BigInt K = k;
  return (N + 3 * K + 1) + K * N * N;
}

BigInt papadimitriou_bound(std::size_t vars, std::size_t rows,
                           const BigInt& a) {
  return BigInt(vars) * pow(BigInt(rows) * a, 2 * static_cast<unsigned>(rows) + 1);
}

namespace {

BigInt direct_z_value(const BigInt& M, std::size_t n, std::size_t k) {
  return intersection_magnitude_bound(M, BigInt(n), k);
}

TamenessNode build_bound(const DecompositionTree& node, std::size_t n,
                         std::size_t n_inflated, std::size_t k);

// Right-nested binary free product over children[s..].
TamenessNode build_free(const DecompositionTree& node, std::size_t s,
                        std::size_t n, std::size_t n_inflated, std::size_t k) {
  if (s + 1 == node.children.size()) {
    return build_bound(node.children[s], n, n_inflated, k);
  }
  const std::size_t m = 3 * n_inflated;
  TamenessNode t;
  t.kind = NodeKind::FreeProduct;
  t.children.push_back(build_bound(node.children[s], n, m, k));
  t.children.push_back(build_free(node, s + 1, n, m, k));
  t.value = free_product_threshold(n, k) + t.children[0].value +
            t.children[1].value + n;
  t.inflated = free_product_threshold(m, k) + t.children[0].inflated +
               t.children[1].inflated + m;
  return t;
}

TamenessNode build_bound(const DecompositionTree& node, std::size_t n,
                         std::size_t n_inflated, std::size_t k) {
  TamenessNode t;
  t.kind = node.kind;
  switch (node.kind) {
    case NodeKind::Trivial:
      t.value = 0;
      t.inflated = 0;
      return t;
    case NodeKind::DirectZ: {
      t.apex = node.apex;
      const auto& child = node.children.front();
      t.children.push_back(build_bound(child, n, n_inflated, k));
      if (child.kind == NodeKind::Trivial) {
        t.value = 1 + 2 * BigInt(n);
        t.inflated = 1 + 2 * BigInt(n_inflated);
      } else {
        t.value = direct_z_value(t.children[0].value, n, k);
        t.inflated = direct_z_value(t.children[0].inflated, n_inflated, k);
      }
      return t;
    }
    case NodeKind::FreeProduct:
      return build_free(node, 0, n, n_inflated, k);
  }
  return t;
}

}  // namespace

TamenessBound tameness_bound(std::size_t n, std::size_t k,
                             const DecompositionTree& tree) {
  TamenessBound b;
  b.n = n;
  b.k = k;
  b.root = build_bound(tree, n, n, k);
  b.value = b.root.value;
  b.inflated_value = b.root.inflated;
  return b;
}

TamenessBound tameness_bound(const ExponentEquation& eq) {
  return tameness_bound(eq.size(), eq.k(), decompose(eq.alphabet));
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solvable:
      return "solvable";
    case SolveStatus::Unsolvable:
      return "unsolvable";
    case SolveStatus::Unknown:
      return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Abelian image

AbelianImage abelianize(const ExponentEquation& eq) {
  const std::size_t m = eq.alphabet.size();
  const auto names = eq.distinct_variables();
  const auto slots = eq.variable_slots();
  AbelianImage img;
  img.columns.assign(names.size(), zero_vector(m));
  img.constant = zero_vector(m);
  auto add = [](IntVector& v, const GroupWord& w) {
    for (const auto& x : w) {
      v[x.gen] += x.inverse ? -1 : 1;
    }
  };
  for (const auto& h : eq.constants) {
    add(img.constant, h);
  }
  for (std::size_t i = 0; i < eq.k(); ++i) {
    add(img.columns[slots[i]], eq.cycles[i]);
  }
  return img;
}

SemilinearSet abelian_solution_set(const ExponentEquation& eq) {
  const AbelianImage img = abelianize(eq);
  const std::size_t K = img.columns.size();
  SemilinearSet s = full_orthant(K);
  for (std::size_t a = 0; a < eq.alphabet.size(); ++a) {
    IntVector u(K);
    for (std::size_t v = 0; v < K; ++v) {
      u[v] = img.columns[v][a];
    }
    s = intersect_with_hyperplane(s, u, -img.constant[a]);
    if (s.empty()) {
      break;
    }
  }
  return s;
}

SemilinearSet solution_set(const ExponentEquation& eq) {
  if (classify(eq.alphabet).kind != GraphKind::Complete) {
    throw InvalidInput("exact solution sets need a complete alphabet");
  }
  return abelian_solution_set(eq);
}

// ---------------------------------------------------------------------------
// Brute force and the automaton reduction

namespace {

Assignment to_assignment(const IntVector& x) {
  Assignment a;
  for (const auto& v : x) {
    a.push_back(static_cast<std::int64_t>(v));
  }
  return a;
}

// Calls visit on every vector in [0, B]^K in lexicographic order until it
// returns true.
bool for_each_box(std::size_t K, std::int64_t B,
                  const std::function<bool(const Assignment&)>& visit) {
  Assignment x(K, 0);
  while (true) {
    if (visit(x)) {
      return true;
    }
    std::size_t i = K;
    while (i > 0 && x[i - 1] == B) {
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return false;
    }
    ++x[i - 1];
  }
}

}  // namespace

std::vector<Assignment> brute_force_solutions(const ExponentEquation& eq,
                                              std::int64_t B,
                                              std::size_t cap) {
  validate_equation(eq);
  const std::size_t K = eq.distinct_variables().size();
  BigInt count = pow(BigInt(B + 1), static_cast<unsigned>(K));
  if (count > cap) {
    throw ResourceExhausted("brute force box exceeds the cap");
  }
  std::vector<Assignment> out;
  for_each_box(K, B, [&](const Assignment& x) {
    if (satisfies(eq, x)) {
      out.push_back(x);
    }
    return false;
  });
  return out;
}

WordAutomaton knapsack_to_automaton(const ExponentEquation& eq,
                                    std::int64_t B) {
  validate_equation(eq);
  if (!eq.knapsack_shape()) {
    throw InvalidInput("automaton reduction needs pairwise distinct variables");
  }
  if (B < 0) {
    throw InvalidInput("negative budget");
  }
  const int k = static_cast<int>(eq.k());
  const int width = static_cast<int>(B) + 1;
  auto id = [&](int i, int j) { return i * width + j; };
  WordAutomaton a;
  a.states = (k + 2) * width;
  a.initial = id(0, 0);
  a.finals = {id(k + 1, 0)};
  a.transitions.push_back({id(0, 0), id(1, 0), eq.constants[0]});
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < B; ++j) {
      a.transitions.push_back({id(i, j), id(i, j + 1), eq.cycles[i - 1]});
      a.transitions.push_back({id(i, j), id(i, j + 1), {}});
    }
    a.transitions.push_back({id(i, static_cast<int>(B)), id(i + 1, 0),
                             eq.constants[i]});
  }
  return a;
}

Assignment assignment_from_path(const ExponentEquation& eq, std::int64_t B,
                                const WordAutomaton& a,
                                const std::vector<int>& path) {
  (void)a;
  Assignment x(eq.k(), 0);
  const std::int64_t stride = 2 * B + 1;
  for (int t : path) {
    if (t == 0) {
      continue;
    }
    const std::int64_t i = (t - 1) / stride;
    const std::int64_t off = (t - 1) % stride;
    if (off < 2 * B && off % 2 == 0) {
      ++x.at(i);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

using Checker = std::function<bool(const Assignment&)>;

// Restores an assignment of the preprocessed equation to the original
// distinct variables; dropped variables get 0.
Assignment lift(const ExponentEquation& original, const ExponentEquation& core,
                const Assignment& x) {
  const auto names = original.distinct_variables();
  const auto core_names = core.distinct_variables();
  Assignment out(names.size(), 0);
  for (std::size_t i = 0; i < core_names.size(); ++i) {
    const auto it = std::find(names.begin(), names.end(), core_names[i]);
    out[static_cast<std::size_t>(it - names.begin())] = x.at(i);
  }
  return out;
}

bool all_finite(const SemilinearSet& s) {
  return std::all_of(s.components.begin(), s.components.end(),
                     [](const LinearSet& c) {
                       return std::all_of(c.periods.begin(), c.periods.end(),
                                          [](const IntVector& p) {
                                            return is_zero(p);
                                          });
                     });
}

// First member (in lexicographic order) accepted by the checker.
std::optional<Assignment> first_member(const std::vector<IntVector>& members,
                                       const Checker& check) {
  for (const auto& m : members) {
    Assignment x = to_assignment(m);
    if (check(x)) {
      return x;
    }
  }
  return std::nullopt;
}

SolveOutcome solve_complete(const ExponentEquation& core) {
  SolveOutcome out;
  out.method = "abelian-semilinear";
  const AbelianImage img = abelianize(core);
  BigInt a = 0;
  for (const auto& col : img.columns) {
    a = std::max(a, max_norm(col));
  }
  a = std::max(a, max_norm(img.constant));
  const BigInt t =
      papadimitriou_bound(img.columns.size(), core.alphabet.size(), a);
  const SemilinearSet s = abelian_solution_set(core);
  if (s.empty()) {
    out.status = SolveStatus::Unsolvable;
    out.bound = t;
    out.bound_source = "papadimitriou";
    out.budget = t;
    return out;
  }
  const LinearSet* best = &s.components.front();
  for (const auto& c : s.components) {
    const BigInt n1 = max_norm(c.base);
    const BigInt n0 = max_norm(best->base);
    if (n1 < n0 || (n1 == n0 && c.base < best->base)) {
      best = &c;
    }
  }
  if (max_norm(best->base) > t) {
    throw std::logic_error("solution exceeds the Papadimitriou bound");
  }
  out.status = SolveStatus::Solvable;
  out.assignment = to_assignment(best->base);
  return out;
}

// Iterative deepening over abelian-feasible candidates up to `limit`.
// Returns true when a solution was found; budget records the largest
// completely searched box.
bool deepen(const SemilinearSet& abelian, const BigInt& limit,
            std::size_t member_cap, const Checker& check, SolveOutcome& out,
            bool& capped) {
  capped = false;
  BigInt L = 1;
  while (true) {
    const BigInt box = std::min(L, limit);
    const auto members = members_within_capped(abelian, box, member_cap);
    if (!members) {
      capped = true;
      return false;
    }
    if (auto x = first_member(*members, check)) {
      out.assignment = *x;
      return true;
    }
    out.budget = box;
    if (box == limit) {
      return false;
    }
    L *= 2;
  }
}

SolveOutcome solve_forest(const ExponentEquation& core,
                          const SolveOptions& options) {
  SolveOutcome out;
  const DecompositionTree tree = decompose(core.alphabet);
  const Checker check = [&](const Assignment& x) {
    return is_identity_stacked(instantiate(core, x), tree);
  };
  const SemilinearSet abelian = abelian_solution_set(core);
  if (abelian.empty()) {
    out.status = SolveStatus::Unsolvable;
    out.method = "abelian-image";
    out.bound = BigInt(0);
    out.bound_source = "abelian-image";
    return out;
  }
  // Free groups are decided exactly.
  if (core.alphabet.edges().empty() && core.knapsack_shape()) {
    out.method = "saturation";
    if (auto x = solve_free_group(core)) {
      out.status = SolveStatus::Solvable;
      out.assignment = *x;
    } else {
      out.status = SolveStatus::Unsolvable;
      const BigInt B = tameness_bound(core.size(), core.k(), tree).inflated_value;
      out.bound = B;
      out.bound_source = "saturation";
      out.budget = B;
    }
    return out;
  }

  if (all_finite(abelian)) {
    out.method = "abelian-image";
    const auto members = members_within(abelian, magnitude(abelian));
    if (auto x = first_member(members, check)) {
      out.status = SolveStatus::Solvable;
      out.assignment = *x;
    } else {
      out.status = SolveStatus::Unsolvable;
      out.bound = magnitude(abelian);
      out.bound_source = "abelian-image";
      out.budget = *out.bound;
    }
    return out;
  }

  // Certified bound on a minimal solution.
  BigInt B = tameness_bound(core.size(), core.k(), tree).inflated_value;
  std::string source = "tameness";
  const std::size_t equalities =
      core.k() - core.distinct_variables().size();
  for (std::size_t e = 0; e < equalities; ++e) {
    B = intersection_magnitude_bound(B, 1, core.k());
    source = "tameness+equalities";
  }

  // Exact sweep of the abelian candidates when there are few of them.
  if (const auto members =
          members_within_capped(abelian, B, options.member_cap)) {
    out.method = "abelian-sweep";
    if (auto x = first_member(*members, check)) {
      out.status = SolveStatus::Solvable;
      out.assignment = *x;
    } else {
      out.status = SolveStatus::Unsolvable;
      out.bound = B;
      out.bound_source = source;
      out.budget = B;
    }
    return out;
  }

  if (B <= options.ceiling && core.knapsack_shape() &&
      BigInt(core.k() + 2) * (B + 1) <= options.automaton_state_limit) {
    const auto budget = static_cast<std::int64_t>(B);
    const WordAutomaton a = knapsack_to_automaton(core, budget);
    MembershipOptions mo;
    mo.node_cap = options.node_cap;
    const MembershipResult r = membership_one(a, core.alphabet, &tree, mo);
    out.method = "automaton";
    if (r.status == MembershipStatus::Found) {
      out.status = SolveStatus::Solvable;
      out.assignment = assignment_from_path(core, budget, a, r.witness);
      return out;
    }
    if (r.status == MembershipStatus::NotFound) {
      out.status = SolveStatus::Unsolvable;
      out.bound = B;
      out.bound_source = source;
      out.budget = B;
      return out;
    }
  }

  out.method = "deepening";
  const BigInt limit = std::min(B, options.ceiling);
  bool capped = false;
  if (deepen(abelian, limit, options.member_cap, check, out, capped)) {
    out.status = SolveStatus::Solvable;
  } else if (!capped && limit == B) {
    out.status = SolveStatus::Unsolvable;
    out.bound = B;
    out.bound_source = source;
  } else {
    out.status = SolveStatus::Unknown;
  }
  return out;
}

SolveOutcome solve_general(const ExponentEquation& core,
                           const SolveOptions& options) {
  SolveOutcome out;
  out.method = "deepening";
  const Checker check = [&](const Assignment& x) { return satisfies(core, x); };
  const SemilinearSet abelian = abelian_solution_set(core);
  bool capped = false;
  if (!abelian.empty() &&
      deepen(abelian, options.ceiling, options.member_cap, check, out, capped)) {
    out.status = SolveStatus::Solvable;
  } else {
    out.status = SolveStatus::Unknown;
    if (abelian.empty()) {
      out.budget = options.ceiling;
    }
  }
  return out;
}

}  // namespace

SolveOutcome solve_knapsack(const ExponentEquation& eq,
                            const SolveOptions& options) {
  const Preprocessed pre = preprocess(eq);
  const ExponentEquation& core = pre.equation;
  SolveOutcome out;
  switch (classify(eq.alphabet).kind) {
    case GraphKind::Complete:
      out = solve_complete(core);
      break;
    case GraphKind::TransitiveForestNotComplete:
      out = solve_forest(core, options);
      break;
    case GraphKind::General:
      out = solve_general(core, options);
      break;
  }
  out.variables = eq.distinct_variables();
  if (out.status == SolveStatus::Solvable) {
    out.assignment = lift(eq, core, out.assignment);
    if (!satisfies(eq, out.assignment)) {
      throw std::logic_error("solver produced an invalid assignment");
    }
  }
  return out;
}

SolveOutcome solve_subset_sum(const ExponentEquation& eq,
                              const SolveOptions& options) {
  validate_equation(eq);
  const std::size_t K = eq.distinct_variables().size();
  if (K > options.subset_sum_cap) {
    throw ResourceExhausted("too many variables for subset sum enumeration");
  }
  const GraphClass cls = classify(eq.alphabet);
  std::optional<DecompositionTree> tree;
  if (cls.kind != GraphKind::General) {
    tree = decompose(eq.alphabet);
  }
  SolveOutcome out;
  out.method = "exhaustive";
  out.variables = eq.distinct_variables();
  const bool found = for_each_box(K, 1, [&](const Assignment& x) {
    const GroupWord w = instantiate(eq, x);
    const bool ok = tree ? is_identity_stacked(w, *tree)
                         : is_identity(w, eq.alphabet);
    if (ok) {
      out.assignment = x;
    }
    return ok;
  });
  out.budget = 1;
  if (found) {
    out.status = SolveStatus::Solvable;
  } else {
    out.status = SolveStatus::Unsolvable;
    out.bound = BigInt(1);
    out.bound_source = "subset-sum";
  }
  return out;
}

ExponentEquation integer_rewrite(const ExponentEquation& eq) {
  validate_equation(eq);
  ExponentEquation r;
  r.alphabet = eq.alphabet;
  r.mode = SolveMode::Knapsack;
  r.constants.push_back(eq.constants.front());
  for (std::size_t i = 0; i < eq.k(); ++i) {
    r.cycles.push_back(eq.cycles[i]);
    r.variables.push_back(eq.variables[i]);
    r.constants.push_back({});
    r.cycles.push_back(inverse(eq.cycles[i]));
    r.variables.push_back(eq.variables[i] + "_neg");
    r.constants.push_back(eq.constants[i + 1]);
  }
  return r;
}

SolveOutcome solve_integer_valued(const ExponentEquation& eq,
                                  const SolveOptions& options) {
  const ExponentEquation r = integer_rewrite(eq);
  SolveOutcome inner = solve_knapsack(r, options);
  SolveOutcome out = inner;
  out.variables = eq.distinct_variables();
  out.assignment.clear();
  if (inner.status == SolveStatus::Solvable) {
    const auto names = r.distinct_variables();
    for (const auto& v : out.variables) {
      const auto pos = std::find(names.begin(), names.end(), v) - names.begin();
      const auto neg =
          std::find(names.begin(), names.end(), v + "_neg") - names.begin();
      out.assignment.push_back(inner.assignment[pos] - inner.assignment[neg]);
    }
    if (!satisfies(eq, out.assignment)) {
      throw std::logic_error("integer rewrite produced an invalid assignment");
    }
  }
  return out;
}

SolveOutcome solve(const ExponentEquation& eq, const SolveOptions& options) {
  switch (eq.mode) {
    case SolveMode::Knapsack:
      return solve_knapsack(eq, options);
    case SolveMode::SubsetSum:
      return solve_subset_sum(eq, options);
    case SolveMode::Integer:
      return solve_integer_valued(eq, options);
  }
  throw InvalidInput("unknown mode");
}

}  // namespace raag
