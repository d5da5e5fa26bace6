#include "raag/cancellation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "raag/knapsack.hpp"

namespace raag {

namespace {

int factor_of(const GroupWord& w, const FreeSplit& split) {
  return split.factor(w.front().gen);
}

void append_syllables(Blocks& out, const GroupWord& w, const FreeSplit& split,
                      bool from_cycle, std::size_t piece, std::int64_t copy) {
  const auto parts = syllables(w, split);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    Block b;
    b.word = parts[s];
    b.factor = factor_of(parts[s], split);
    b.from_cycle = from_cycle;
    b.piece = piece;
    b.copy = copy;
    b.syllable = s;
    out.push_back(std::move(b));
  }
}

bool is_cycle_block(const Block& b, std::size_t i) {
  return b.from_cycle && b.piece == i;
}

}  // namespace

void check_format(const FreeInstance& inst) {
  const auto& eq = inst.equation;
  validate_equation(eq);
  if (!eq.knapsack_shape()) {
    throw InvalidInput("free product instances need distinct variables");
  }
  for (const auto& u : eq.cycles) {
    if (u.empty()) {
      throw InvalidInput("empty cycle");
    }
    if (reduce_word(u, eq.alphabet).size() != u.size()) {
      throw InvalidInput("cycle is not reduced");
    }
    const auto parts = syllables(u, inst.split);
    if (parts.size() > 1 &&
        factor_of(parts.front(), inst.split) ==
            factor_of(parts.back(), inst.split)) {
      throw InvalidInput("mixed cycle starts and ends in the same factor");
    }
  }
}

Blocks block_factorize(const FreeInstance& inst, const Assignment& x) {
  check_format(inst);
  const auto& eq = inst.equation;
  if (x.size() != eq.k()) {
    throw InvalidInput("exponent vector has the wrong length");
  }
  Blocks out;
  append_syllables(out, eq.constants[0], inst.split, false, 0, 0);
  for (std::size_t i = 0; i < eq.k(); ++i) {
    for (std::int64_t c = 0; c < x[i]; ++c) {
      append_syllables(out, eq.cycles[i], inst.split, true, i, c);
    }
    append_syllables(out, eq.constants[i + 1], inst.split, false, i + 1, 0);
  }
  return out;
}

Blocks blocks_from_words(const std::vector<GroupWord>& words,
                         const FreeSplit& split) {
  Blocks out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) {
      throw InvalidInput("empty block");
    }
    Block b;
    b.word = words[i];
    b.factor = factor_of(words[i], split);
    for (const auto& x : words[i]) {
      if (split.factor(x.gen) != b.factor) {
        throw InvalidInput("block spans both factors");
      }
    }
    b.piece = i;
    out.push_back(std::move(b));
  }
  return out;
}

GroupWord concatenate(const Blocks& blocks) {
  GroupWord w;
  for (const auto& b : blocks) {
    w.insert(w.end(), b.word.begin(), b.word.end());
  }
  return w;
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Partition:
      return "partition";
    case Axiom::Consistent:
      return "consistent";
    case Axiom::Cancelling:
      return "cancelling";
    case Axiom::WellNested:
      return "well-nested";
    case Axiom::Maximal:
      return "maximal";
  }
  return "?";
}

CancellationVerdict verify_cancellation(const Blocks& blocks,
                                        const Cancellation& c,
                                        const IndependenceAlphabet& alpha) {
  const int m = static_cast<int>(blocks.size());
  auto fail = [](Axiom a) { return CancellationVerdict{false, a}; };

  std::vector<int> owner(m, -1);
  for (int e = 0; e < static_cast<int>(c.size()); ++e) {
    if (c[e].empty()) {
      return fail(Axiom::Partition);
    }
    for (int b : c[e]) {
      if (b < 0 || b >= m || owner[b] >= 0) {
        return fail(Axiom::Partition);
      }
      owner[b] = e;
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    return fail(Axiom::Partition);
  }

  std::vector<Edge> edges = c;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
  }
  for (const auto& e : edges) {
    for (int b : e) {
      if (blocks[b].factor != blocks[e.front()].factor) {
        return fail(Axiom::Consistent);
      }
    }
  }
  for (const auto& e : edges) {
    GroupWord w;
    for (int b : e) {
      w.insert(w.end(), blocks[b].word.begin(), blocks[b].word.end());
    }
    if (!is_identity(w, alpha)) {
      return fail(Axiom::Cancelling);
    }
  }
  // A crossing i1 < j1 < i2 < j2 puts some j inside a gap of I and another
  // j beyond that gap.
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (a == b) {
        continue;
      }
      const auto& I = edges[a];
      const auto& J = edges[b];
      for (std::size_t g = 0; g + 1 < I.size(); ++g) {
        const bool inside = std::any_of(J.begin(), J.end(), [&](int j) {
          return I[g] < j && j < I[g + 1];
        });
        const bool beyond = std::any_of(J.begin(), J.end(),
                                        [&](int j) { return j > I[g + 1]; });
        if (inside && beyond) {
          return fail(Axiom::WellNested);
        }
      }
    }
  }
  for (int i = 0; i + 1 < m; ++i) {
    if (blocks[i].factor == blocks[i + 1].factor && owner[i] != owner[i + 1]) {
      return fail(Axiom::Maximal);
    }
  }
  return {true, std::nullopt};
}

std::optional<Cancellation> find_cancellation(
    const Blocks& blocks, const IndependenceAlphabet& alpha) {
  struct Run {
    int factor;
    Edge members;
    GroupWord word;
  };
  std::vector<Run> stack;
  Cancellation result;
  auto pop_if_trivial = [&]() {
    if (!stack.empty() && is_identity(stack.back().word, alpha)) {
      result.push_back(std::move(stack.back().members));
      stack.pop_back();
      return true;
    }
    return false;
  };
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const Block& blk = blocks[b];
    if (!stack.empty() && stack.back().factor != blk.factor) {
      pop_if_trivial();
    }
    if (!stack.empty() && stack.back().factor == blk.factor) {
      stack.back().members.push_back(b);
      stack.back().word.insert(stack.back().word.end(), blk.word.begin(),
                               blk.word.end());
    } else {
      stack.push_back({blk.factor, {b}, blk.word});
    }
  }
  while (pop_if_trivial()) {
  }
  if (!stack.empty()) {
    return std::nullopt;
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_mixed(const FreeInstance& inst, std::size_t cycle) {
  return syllable_count(inst.equation.cycles.at(cycle), inst.split) > 1;
}

std::vector<MixedPeriod> mixed_periods(const FreeInstance& inst) {
  const auto& eq = inst.equation;
  std::vector<MixedPeriod> out;
  for (std::size_t i = 0; i < eq.k(); ++i) {
    for (std::size_t j = i + 1; j < eq.k(); ++j) {
      if (!is_mixed(inst, i) || !is_mixed(inst, j)) {
        continue;
      }
      MixedPeriod p;
      p.i = i;
      p.j = j;
      p.vector = zero_vector(eq.k());
      p.vector[i] = syllable_count(eq.cycles[j], inst.split);
      p.vector[j] = syllable_count(eq.cycles[i], inst.split);
      out.push_back(std::move(p));
    }
  }
  return out;
}

CertifiedSolution certify(const FreeInstance& inst, const Assignment& x) {
  CertifiedSolution s;
  s.x = x;
  s.blocks = block_factorize(inst, x);
  auto c = find_cancellation(s.blocks, inst.equation.alphabet);
  if (!c) {
    throw InvalidInput("not a solution");
  }
  s.cancellation = std::move(*c);
  return s;
}

namespace {

// lambda^t (left) or rho^t (right) applied to u^e, by syllables.
GroupWord rotated_power(const GroupWord& u, std::size_t e, std::size_t t,
                        const FreeSplit& split, bool left) {
  const auto parts = syllables(power(u, static_cast<std::int64_t>(e)), split);
  const std::size_t n = parts.size();
  GroupWord out;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t src = left ? (s + t) % n : (s + n - t % n) % n;
    out.insert(out.end(), parts[src].begin(), parts[src].end());
  }
  return out;
}

std::pair<int, int> cycle_block_range(const Blocks& blocks, std::size_t i) {
  int first = -1;
  int last = -1;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (is_cycle_block(blocks[b], i)) {
      if (first < 0) {
        first = b;
      }
      last = b;
    }
  }
  return {first, last};
}

// Maps every old block to its index in the new factorization.
Cancellation remap(const Cancellation& c, const std::vector<int>& index) {
  Cancellation out;
  for (const auto& e : c) {
    Edge f;
    for (int b : e) {
      if (index[b] >= 0) {
        f.push_back(index[b]);
      }
    }
    if (!f.empty()) {
      std::sort(f.begin(), f.end());
      out.push_back(std::move(f));
    }
  }
  return out;
}

void check_certified(const CertifiedSolution& s,
                     const IndependenceAlphabet& alpha, const char* what) {
  if (!verify_cancellation(s.blocks, s.cancellation, alpha).ok) {
    throw std::logic_error(std::string(what) + " produced an invalid cancellation");
  }
}

}  // namespace

std::vector<CompatibleWitness> compatible_periods(const FreeInstance& inst,
                                                  const CertifiedSolution& s) {
  const auto& eq = inst.equation;
  const auto& alpha = eq.alphabet;
  std::vector<CompatibleWitness> out;
  for (const auto& period : mixed_periods(inst)) {
    const std::size_t i = period.i;
    const std::size_t j = period.j;
    const auto [r, ri] = cycle_block_range(s.blocks, i);
    const auto [sj0, s_last] = cycle_block_range(s.blocks, j);
    (void)ri;
    (void)sj0;
    if (r < 0 || s_last < 0) {
      continue;
    }
    const std::size_t ni = syllable_count(eq.cycles[i], inst.split);
    const std::size_t nj = syllable_count(eq.cycles[j], inst.split);
    for (const auto& e : s.cancellation) {
      if (e.size() != 2) {
        continue;
      }
      const int p = e[0];
      const int q = e[1];
      if (!is_cycle_block(s.blocks[p], i) || !is_cycle_block(s.blocks[q], j)) {
        continue;
      }
      GroupWord w = rotated_power(eq.cycles[i], nj, p - r, inst.split, true);
      const GroupWord right =
          rotated_power(eq.cycles[j], ni, s_last - q, inst.split, false);
      w.insert(w.end(), right.begin(), right.end());
      if (is_identity(w, alpha)) {
        out.push_back({period, p, q});
        break;
      }
    }
  }
  return out;
}

CertifiedSolution grow(const FreeInstance& inst, const CertifiedSolution& s,
                       const MixedPeriod& period) {
  const auto& eq = inst.equation;
  std::optional<CompatibleWitness> witness;
  for (const auto& w : compatible_periods(inst, s)) {
    if (w.period.i == period.i && w.period.j == period.j) {
      witness = w;
    }
  }
  if (!witness) {
    throw InvalidInput("period is not compatible with the certified solution");
  }
  const int N = static_cast<int>(syllable_count(eq.cycles[period.i], inst.split) *
                                 syllable_count(eq.cycles[period.j], inst.split));
  const int p = witness->p;
  const int q = witness->q;
  CertifiedSolution g;
  g.x = s.x;
  g.x[period.i] += static_cast<std::int64_t>(period.vector[period.i]);
  g.x[period.j] += static_cast<std::int64_t>(period.vector[period.j]);
  g.blocks = block_factorize(inst, g.x);
  const int m = static_cast<int>(s.blocks.size());
  std::vector<int> index(m);
  for (int b = 0; b < m; ++b) {
    index[b] = b < p ? b : (b <= q ? b + N : b + 2 * N);
    if (g.blocks[index[b]].word != s.blocks[b].word) {
      throw std::logic_error("grow: block layout mismatch");
    }
  }
  g.cancellation = remap(s.cancellation, index);
  for (int l = 0; l < N; ++l) {
    g.cancellation.push_back({p + l, q + 2 * N - l});
  }
  std::sort(g.cancellation.begin(), g.cancellation.end());
  check_certified(g, eq.alphabet, "grow");
  return g;
}

std::int64_t mixed_norm(const FreeInstance& inst, const Assignment& x) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < inst.equation.k(); ++i) {
    if (is_mixed(inst, i)) {
      m = std::max(m, x.at(i));
    }
  }
  return m;
}

BigInt shrink_threshold(const FreeInstance& inst) {
  return free_product_threshold(inst.equation.size(), inst.equation.k());
}

std::optional<ShrinkStep> shrink(const FreeInstance& inst,
                                 const CertifiedSolution& s, bool force) {
  const auto& eq = inst.equation;
  const BigInt threshold = shrink_threshold(inst);
  if (!force && BigInt(mixed_norm(inst, s.x)) <= threshold) {
    return std::nullopt;
  }
  const std::size_t k = eq.k();
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_mixed(inst, i) || (!force && BigInt(s.x[i]) <= threshold)) {
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || !is_mixed(inst, j)) {
        continue;
      }
      const std::size_t a = std::min(i, j);
      const std::size_t b = std::max(i, j);
      const int N = static_cast<int>(syllable_count(eq.cycles[a], inst.split) *
                                     syllable_count(eq.cycles[b], inst.split));
      // Standard edges between u_a and u_b, keyed by the u_a block.
      std::map<int, int> partner;
      for (const auto& e : s.cancellation) {
        if (e.size() == 2 && is_cycle_block(s.blocks[e[0]], a) &&
            is_cycle_block(s.blocks[e[1]], b)) {
          partner[e[0]] = e[1];
        }
      }
      if (static_cast<int>(partner.size()) < N + 1) {
        continue;
      }
      const int p = partner.rbegin()->first;
      const int p0 = p - N;
      bool aligned = true;
      const int q = partner[p];
      for (int l = 0; l <= N && aligned; ++l) {
        const auto it = partner.find(p - l);
        aligned = it != partner.end() && it->second == q + l;
      }
      if (!aligned) {
        continue;
      }
      const int q1 = q + N;
      MixedPeriod period;
      period.i = a;
      period.j = b;
      period.vector = zero_vector(k);
      period.vector[a] = syllable_count(eq.cycles[b], inst.split);
      period.vector[b] = syllable_count(eq.cycles[a], inst.split);

      ShrinkStep step;
      step.period = period;
      CertifiedSolution& r = step.result;
      r.x = s.x;
      r.x[a] -= static_cast<std::int64_t>(period.vector[a]);
      r.x[b] -= static_cast<std::int64_t>(period.vector[b]);
      r.blocks = block_factorize(inst, r.x);
      const int m = static_cast<int>(s.blocks.size());
      std::vector<int> index(m, -1);
      int next = 0;
      for (int blk = 0; blk < m; ++blk) {
        const bool removed =
            (blk >= p0 && blk < p) || (blk > q && blk <= q1);
        if (removed) {
          continue;
        }
        index[blk] = next;
        if (r.blocks.at(next).word != s.blocks[blk].word) {
          throw std::logic_error("shrink: block layout mismatch");
        }
        ++next;
      }
      r.cancellation = remap(s.cancellation, index);
      check_certified(r, eq.alphabet, "shrink");
      return step;
    }
  }
  if (force) {
    return std::nullopt;
  }
  throw std::logic_error("shrink: no removable interval above the threshold");
}

LocalCover local_semilinear_cover(const FreeInstance& inst,
                                  const Assignment& x) {
  const auto& eq = inst.equation;
  const auto& alpha = eq.alphabet;
  const std::size_t k = eq.k();
  LocalCover result;
  result.reduced = certify(inst, x);
  while (auto step = shrink(inst, result.reduced)) {
    result.reduced = std::move(step->result);
  }
  const CertifiedSolution& red = result.reduced;
  for (const auto& w : compatible_periods(inst, red)) {
    result.periods.push_back(w.period);
  }

  LinearSet head;
  head.base = zero_vector(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (is_mixed(inst, i)) {
      head.base[i] = red.x[i];
    }
  }
  for (const auto& p : result.periods) {
    head.periods.push_back(p.vector);
  }
  SemilinearSet cover;
  cover.dim = k;
  cover.components.push_back(head);

  // Group simple cycles with blocks by the edge holding them.
  std::map<int, std::vector<std::size_t>> groups;  // edge index -> cycles
  std::vector<int> owner(red.blocks.size(), -1);
  for (int e = 0; e < static_cast<int>(red.cancellation.size()); ++e) {
    for (int b : red.cancellation[e]) {
      owner[b] = e;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (is_mixed(inst, i) || red.x[i] == 0) {
      continue;
    }
    const auto [first, last] = cycle_block_range(red.blocks, i);
    (void)last;
    groups[owner[first]].push_back(i);
  }

  for (const auto& [edge, cycles] : groups) {
    const int side = red.blocks[red.cancellation[edge].front()].factor;
    std::vector<int> gens;
    for (int g = 0; g < static_cast<int>(alpha.size()); ++g) {
      if (inst.split.factor(g) == side) {
        gens.push_back(g);
      }
    }
    std::vector<int> local(alpha.size(), -1);
    for (std::size_t t = 0; t < gens.size(); ++t) {
      local[gens[t]] = static_cast<int>(t);
    }
    auto to_local = [&](const GroupWord& w) {
      GroupWord out;
      for (const auto& l : w) {
        out.push_back({local[l.gen], l.inverse});
      }
      return out;
    };
    ExponentEquation sub;
    sub.alphabet = alpha.induced(gens);
    if (classify(sub.alphabet).kind != GraphKind::Complete) {
      throw InvalidInput("factor without an exact solution set");
    }
    sub.constants.emplace_back();
    std::size_t current = 0;  // cycles[current] is the next one to meet
    for (int b : red.cancellation[edge]) {
      const Block& blk = red.blocks[b];
      if (current < cycles.size() && is_cycle_block(blk, cycles[current])) {
        sub.cycles.push_back(to_local(eq.cycles[cycles[current]]));
        sub.variables.push_back("z" + std::to_string(cycles[current]));
        sub.constants.emplace_back();
        ++current;
        continue;
      }
      if (current > 0 && is_cycle_block(blk, cycles[current - 1])) {
        continue;
      }
      const GroupWord lw = to_local(blk.word);
      sub.constants.back().insert(sub.constants.back().end(), lw.begin(),
                                  lw.end());
    }
    const SemilinearSet local_set = solution_set(sub);
    SemilinearSet embedded;
    embedded.dim = k;
    auto embed = [&](const IntVector& v) {
      IntVector e = zero_vector(k);
      for (std::size_t t = 0; t < cycles.size(); ++t) {
        e[cycles[t]] = v[t];
      }
      return e;
    };
    for (const auto& c : local_set.components) {
      LinearSet l;
      l.base = embed(c.base);
      for (const auto& p : c.periods) {
        l.periods.push_back(embed(p));
      }
      embedded.components.push_back(std::move(l));
    }
    cover = minkowski_sum(cover, embedded);
  }
  result.cover = normalized(std::move(cover));
  IntVector xv;
  for (auto v : x) {
    xv.push_back(v);
  }
  if (!semilinear_member(result.cover, xv)) {
    throw std::logic_error("cover misses the given solution");
  }
  return result;
}

}  // namespace raag
