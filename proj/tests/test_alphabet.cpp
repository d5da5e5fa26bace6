#include "doctest.h"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

TEST_SUITE("alphabet") {

TEST_CASE("validation") {
  const auto f2 = free2();
  CHECK(f2.size() == 2);
  CHECK(f2.edges().empty());
  CHECK_THROWS_AS(make_alphabet({"a"}, {{"a", "a"}}), InvalidInput);
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), InvalidInput);
  CHECK_THROWS_AS(make_alphabet({"a"}, {{"a", "z"}}), InvalidInput);
  CHECK_THROWS_AS(make_alphabet({"A"}), InvalidInput);
  CHECK_THROWS_AS(make_alphabet({""}), InvalidInput);
  CHECK(is_valid_generator_name("x_1"));
  CHECK_FALSE(is_valid_generator_name("1x"));

  const auto p = p4();
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.independent(1, 0));
  CHECK_FALSE(p.independent(0, 0));
  CHECK_FALSE(p.independent(0, 3));
  // Edge order and orientation do not matter.
  CHECK(make_alphabet({"a", "b"}, {{"b", "a"}, {"a", "b"}}) == z2());
}

TEST_CASE("classify examples") {
  CHECK(classify(z2()).kind == GraphKind::Complete);
  CHECK(classify(IndependenceAlphabet{}).kind == GraphKind::Complete);
  CHECK(classify(make_alphabet({"a"})).kind == GraphKind::Complete);

  const auto g = classify(p4());
  REQUIRE(g.kind == GraphKind::General);
  CHECK(g.pattern == ForbiddenPattern::P4);
  CHECK(g.witness == std::array<int, 4>{0, 1, 2, 3});

  const auto c = classify(c4());
  REQUIRE(c.kind == GraphKind::General);
  CHECK(c.pattern == ForbiddenPattern::C4);
  CHECK(induces_pattern(c4(), c.witness, ForbiddenPattern::C4));

  const auto p3 = make_alphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(classify(p3).kind == GraphKind::TransitiveForestNotComplete);
  CHECK(classify(free2()).kind == GraphKind::TransitiveForestNotComplete);
}

TEST_CASE("complete graphs of every size are Complete") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint32_t all = (1U << (n * (n - 1) / 2)) - 1U;
    CHECK(classify(graph_from_mask(n, all)).kind == GraphKind::Complete);
  }
}

TEST_CASE("decompose examples") {
  using T = DecompositionTree;
  const auto f2 = free2();
  const T tree = decompose(f2);
  CHECK(tree.kind == NodeKind::FreeProduct);
  CHECK(to_string(tree, f2) == "FreeProduct(DirectZ(a, 1), DirectZ(b, 1))");

  const auto p3 = make_alphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(to_string(decompose(p3), p3) ==
        "DirectZ(b, FreeProduct(DirectZ(a, 1), DirectZ(c, 1)))");
  CHECK(to_string(decompose(z2()), z2()) == "DirectZ(a, DirectZ(b, 1))");
  CHECK(decompose(IndependenceAlphabet{}).kind == NodeKind::Trivial);

  CHECK_THROWS_AS(decompose(p4()), NotTransitiveForest);
  CHECK_THROWS_AS(decompose(c4()), NotTransitiveForest);
}

TEST_CASE("decomposition invariants on all graphs with five vertices") {
  for (std::uint32_t mask = 0; mask < (1U << 10); ++mask) {
    const auto alpha = graph_from_mask(5, mask);
    if (oracle_has_p4_or_c4(alpha)) {
      CHECK_THROWS_AS(decompose(alpha), NotTransitiveForest);
      continue;
    }
    const DecompositionTree t = decompose(alpha);
    CHECK(t == decompose(alpha));
    CHECK(implied_edges(t) == alpha.edges());
    auto leaves = flatten(t);
    std::sort(leaves.begin(), leaves.end());
    CHECK(leaves == std::vector<int>{0, 1, 2, 3, 4});
  }
}

}  // TEST_SUITE
