#include "doctest.h"
#include "raag/cancellation.hpp"
#include "raag/knapsack.hpp"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

FreeInstance free_instance(const std::vector<std::string>& constants,
                           const std::vector<std::string>& cycles) {
  const auto f = free2();
  FreeInstance inst;
  inst.equation.alphabet = f;
  for (const auto& c : constants) {
    inst.equation.constants.push_back(word(f, c));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    inst.equation.cycles.push_back(word(f, cycles[i]));
    inst.equation.variables.push_back("x" + std::to_string(i + 1));
  }
  inst.split = split_of(decompose(f), f.size());
  return inst;
}

Blocks blocks(const std::vector<std::string>& words) {
  const auto f = free2();
  std::vector<GroupWord> ws;
  for (const auto& w : words) {
    ws.push_back(word(f, w));
  }
  return blocks_from_words(ws, split_of(decompose(f), f.size()));
}

std::optional<Axiom> violated(const std::vector<std::string>& words,
                              const Cancellation& c) {
  return verify_cancellation(blocks(words), c, free2()).violated;
}

}  // namespace

TEST_SUITE("cancellation") {

TEST_CASE("block factorization") {
  const auto inst = free_instance({"", ""}, {"a b"});
  const Blocks b = block_factorize(inst, {2});
  REQUIRE(b.size() == 4);
  CHECK(b[0].word == word(free2(), "a"));
  CHECK(b[3].word == word(free2(), "b"));
  CHECK(b[2].from_cycle);
  CHECK(b[2].copy == 1);
  CHECK(b[2].syllable == 0);
  CHECK(block_factorize(inst, {0}).empty());

  const auto with_v = free_instance({"b", "a a"}, {"a b"});
  const Blocks v = block_factorize(with_v, {0});
  REQUIRE(v.size() == 2);
  CHECK_FALSE(v[0].from_cycle);
  CHECK(v[1].piece == 1);

  CHECK_THROWS_AS(check_format(free_instance({"", ""}, {"a b a"})), InvalidInput);
  CHECK_THROWS_AS(check_format(free_instance({"", ""}, {"a a^-1"})), InvalidInput);
}

TEST_CASE("axioms") {
  CHECK_FALSE(violated({"a", "b", "b^-1", "a^-1"}, {{1, 2}, {0, 3}}).has_value());
  CHECK(violated({"a", "b", "a^-1", "b^-1"}, {{0, 2}, {1, 3}}) == Axiom::WellNested);
  CHECK(violated({"a", "a^-1"}, {{0}}) == Axiom::Partition);
  CHECK(violated({"a", "a^-1"}, {{0, 1}, {1}}) == Axiom::Partition);
  CHECK(violated({"a", "b"}, {{0, 1}}) == Axiom::Consistent);
  CHECK(violated({"a", "a"}, {{0, 1}}) == Axiom::Cancelling);
  CHECK(violated({"a", "a^-1", "a", "a^-1"}, {{0, 1}, {2, 3}}) == Axiom::Maximal);
  CHECK_FALSE(violated({"a", "a^-1", "a", "a^-1"}, {{0, 1, 2, 3}}).has_value());
}

TEST_CASE("finding cancellations") {
  const auto f = free2();
  CHECK(find_cancellation(blocks({"a", "a^-1"}), f) == Cancellation{{0, 1}});
  CHECK_FALSE(find_cancellation(blocks({"a", "b"}), f).has_value());
  const auto c = find_cancellation(blocks({"a", "b", "b^-1", "a^-1"}), f);
  REQUIRE(c.has_value());
  CHECK(verify_cancellation(blocks({"a", "b", "b^-1", "a^-1"}), *c, f).ok);
}

TEST_CASE("mixed periods") {
  const auto two = free_instance({"", "", ""}, {"a b", "b^-1 a^-1 b a"});
  REQUIRE(is_mixed(two, 0));
  const auto p = mixed_periods(two);
  REQUIRE(p.size() == 1);
  CHECK(p[0].vector == IntVector{4, 2});
  CHECK(mixed_periods(free_instance({"", "", ""}, {"a", "b"})).empty());
  CHECK(mixed_periods(free_instance({"", ""}, {"a b"})).empty());
}

TEST_CASE("compatibility, growing and shrinking") {
  const auto inst = free_instance({"", "", ""}, {"a b", "b^-1 a^-1"});
  const CertifiedSolution s = certify(inst, {1, 1});
  CHECK(verify_cancellation(s.blocks, s.cancellation, free2()).ok);
  const auto compat = compatible_periods(inst, s);
  REQUIRE(compat.size() == 1);
  CHECK(compat[0].period.vector == IntVector{2, 2});

  const CertifiedSolution g = grow(inst, s, compat[0].period);
  CHECK(g.x == Assignment{3, 3});
  CHECK(verify_cancellation(g.blocks, g.cancellation, free2()).ok);
  CHECK(oracle_identity(concatenate(g.blocks), free2()));
  CHECK(compatible_periods(inst, g).size() == 1);
  const CertifiedSolution gg = grow(inst, g, compat[0].period);
  CHECK(gg.x == Assignment{5, 5});

  CHECK_FALSE(shrink(inst, g).has_value());  // below the threshold
  const auto back = shrink(inst, g, true);
  REQUIRE(back.has_value());
  CHECK(back->result.x == s.x);
  CHECK(verify_cancellation(back->result.blocks, back->result.cancellation, free2()).ok);

  CHECK(shrink_threshold(inst) == BigInt((4 + 6 + 1) + 2 * 16));
  CHECK_THROWS_AS(certify(inst, {1, 0}), InvalidInput);

  // Simple cycles only: nothing is compatible.
  const auto simple = free_instance({"", "", "b^-1 a^-1"}, {"a", "b"});
  CHECK(compatible_periods(simple, certify(simple, {1, 1})).empty());

  // No edge between the two cycles.
  const auto apart = free_instance({"", "b^-1 a^-1", "a b"}, {"a b", "b^-1 a^-1"});
  const CertifiedSolution sa = certify(apart, {1, 1});
  CHECK(compatible_periods(apart, sa).empty());
}

TEST_CASE("shrinking above the threshold") {
  const auto inst = free_instance({"", "", ""}, {"a b", "b^-1 a^-1"});
  const std::int64_t big_x = static_cast<std::int64_t>(shrink_threshold(inst)) + 1;
  const CertifiedSolution s = certify(inst, {big_x, big_x});
  const auto step = shrink(inst, s);
  REQUIRE(step.has_value());
  CHECK(step->result.x == Assignment{big_x - 2, big_x - 2});
  CHECK(oracle_identity(concatenate(step->result.blocks), free2()));
}

TEST_CASE("local semilinear cover") {
  const auto inst = free_instance({"", "", "b^-1 b^-1 a^-1 a^-1"}, {"a", "b"});
  const LocalCover lc = local_semilinear_cover(inst, {2, 2});
  CHECK(semilinear_member(lc.cover, IntVector{2, 2}));
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      if (semilinear_member(lc.cover, IntVector{x, y})) {
        CHECK(oracle_identity(oracle_instantiate(inst.equation, {x, y}), free2()));
      }
    }
  }

  const auto mixed = free_instance({"", "", ""}, {"a b", "b^-1 a^-1"});
  const auto grown = local_semilinear_cover(mixed, {7, 7});
  CHECK_FALSE(grown.periods.empty());
  CHECK(semilinear_member(grown.cover, IntVector{7, 7}));
  CHECK(semilinear_member(grown.cover, IntVector{9, 9}));
  CHECK_FALSE(semilinear_member(grown.cover, IntVector{7, 8}));
  CHECK_THROWS_AS(local_semilinear_cover(mixed, {1, 2}), InvalidInput);
}

TEST_CASE("structure of found cancellations") {
  // No edge holds two blocks of one mixed cycle.
  const auto inst = free_instance({"", "", "a b^-1"}, {"a b", "b a^-1"});
  for (std::int64_t x = 0; x <= 4; ++x) {
    for (std::int64_t y = 0; y <= 4; ++y) {
      if (!oracle_identity(oracle_instantiate(inst.equation, {x, y}), free2())) {
        continue;
      }
      const auto s = certify(inst, {x, y});
      for (const auto& e : s.cancellation) {
        for (std::size_t i = 0; i < 2; ++i) {
          int count = 0;
          for (int b : e) {
            count += s.blocks[b].from_cycle && s.blocks[b].piece == i;
          }
          CHECK(count <= 1);
        }
      }
    }
  }
}

}  // TEST_SUITE
