#include "doctest.h"
#include "raag/gadgets.hpp"
#include "raag/serialize.hpp"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

TEST_SUITE("serialize") {

TEST_CASE("alphabets and words") {
  const Json j = parse_json(R"({"generators": ["a","b","c"], "edges": [["b","a"]]})");
  const auto alpha = alphabet_from_json(j);
  CHECK(alpha == make_alphabet({"a", "b", "c"}, {{"a", "b"}}));
  CHECK(alphabet_from_json(to_json(alpha)) == alpha);
  CHECK(to_json(alpha).dump() == R"({"generators":["a","b","c"],"edges":[["a","b"]]})");

  const GroupWord w = word(alpha, "a b^-1 c");
  CHECK(to_json(w, alpha).dump() == R"(["a","b^-1","c"])");
  CHECK(word_from_json(to_json(w, alpha), alpha) == w);
  CHECK_THROWS_AS(word_from_json(parse_json(R"(["a^-2"])"), alpha), InvalidInput);
  CHECK_THROWS_AS(word_from_json(parse_json(R"([1])"), alpha), InvalidInput);
  CHECK_THROWS_AS(parse_json("{"), InvalidInput);
  CHECK_THROWS_AS(alphabet_from_json(parse_json(R"({"generators": ["a","a"]})")),
                  InvalidInput);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("automata") {
  const auto p = p4();
  const Json j = parse_json(R"({"states": 3, "initial": 0, "finals": [2],
      "transitions": [{"from": 0, "to": 1, "label": ["a", "a^-1"]},
                      {"from": 1, "to": 2, "label": []}],
      "loops": [{"state": 2, "label": ["b", "c"]}]})");
  const WordAutomaton a = automaton_from_json(j, p);
  CHECK(a.states == 3);
  CHECK(a.transitions.size() == 3);
  CHECK(a.transitions[2] == Transition{2, 2, word(p, "b c")});
  CHECK(automaton_from_json(to_json(a, p), p) == a);
  CHECK(to_json(a, p).contains("loops"));
  CHECK_THROWS_AS(automaton_from_json(parse_json(R"({"states": 1, "initial": 3, "finals": []})"), p),
                  InvalidInput);
}

TEST_CASE("equations and outcomes") {
  const auto f = free2();
  ExponentEquation eq = knapsack_instance(f, {word(f, "a"), word(f, "b")}, word(f, "a b"));
  eq.mode = SolveMode::SubsetSum;
  const Json j = to_json(eq);
  CHECK(j.at("mode") == "subsetsum");
  CHECK(j.at("variables") == Json::array({"x1", "x2"}));
  CHECK(equation_from_json(j) == eq);
  CHECK(equation_from_json(parse_json(j.dump())) == eq);

  Json broken = j;
  broken["constants"].erase(0);
  CHECK_THROWS_AS(equation_from_json(broken), InvalidInput);

  SolveOutcome out;
  out.status = SolveStatus::Solvable;
  out.variables = {"x1", "x2"};
  out.assignment = {1, 1};
  out.method = "test";
  const Json o = to_json(out);
  CHECK(o.at("status") == "solvable");
  CHECK(o.at("assignment").at("x2") == 1);
  CHECK(o.at("bound").is_null());

  SolveOutcome no;
  no.status = SolveStatus::Unsolvable;
  no.bound = BigInt(1) << 80;
  no.bound_source = "tameness";
  const Json n = to_json(no);
  CHECK(n.at("assignment").is_null());
  CHECK(n.at("bound") == "1208925819614629174706176");
  CHECK(to_json(BigInt(-5)) == -5);
}

TEST_CASE("semilinear sets and cancellations") {
  const SemilinearSet s{2, {LinearSet{IntVector{1, 0}, {IntVector{1, 1}}}}};
  const Json j = to_json(s);
  CHECK(j.dump() == R"({"dim":2,"components":[{"base":[1,0],"periods":[[1,1]]}]})");
  CHECK(semilinear_from_json(j) == s);

  const Cancellation c{{0, 3}, {1, 2}};
  CHECK(to_json(c).dump() == "[[1,4],[2,3]]");
  CHECK(cancellation_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(cancellation_from_json(parse_json("[[0]]")), InvalidInput);
}

TEST_CASE("trees, bounds and gadgets") {
  const auto p3 = make_alphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const Json t = to_json(decompose(p3), p3);
  CHECK(t.at("kind") == "direct_z");
  CHECK(t.at("apex") == "b");
  const Json b = to_json(tameness_bound(10, 1, decompose(p3)), p3);
  CHECK(b.at("n") == 10);
  CHECK(b.contains("inflated_bound"));

  const GadgetInstance g = sat_to_p4_knapsack({1, {{1}}});
  const Json gj = to_json(g);
  CHECK(gj.at("budget") == g.budget);
  CHECK(gj.at("budgets").size() == g.equation.k());
  CHECK(equation_from_json(gj) == g.equation);
}

}  // TEST_SUITE
