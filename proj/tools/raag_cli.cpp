// Command line front end.  Every command prints one JSON document.
// Exit codes: 0 decided, 2 undecided within the limits, 1 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raag/alphabet.hpp"
#include "raag/automata.hpp"
#include "raag/gadgets.hpp"
#include "raag/group.hpp"
#include "raag/knapsack.hpp"
#include "raag/serialize.hpp"
#include "raag/trace.hpp"

namespace {

using raag::Json;

constexpr int kDecided = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;

struct Common {
  std::string input;
  std::string output;
  std::optional<long long> seed;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-i,--input", c.input, "input file")->required();
  cmd->add_option("-o,--output", c.output, "write JSON here instead of stdout");
  cmd->add_option("--seed", c.seed, "echoed in the output");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw raag::InvalidInput("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(Json j, const Common& c) {
  if (c.seed) {
    j["seed"] = *c.seed;
  }
  const std::string text = j.dump() + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) {
    throw raag::InvalidInput("cannot write '" + c.output + "'");
  }
  out << text;
}

// An alphabet file, or any document carrying an "alphabet" object.
raag::IndependenceAlphabet load_alphabet(const Json& j) {
  return raag::alphabet_from_json(j.contains("alphabet") ? j.at("alphabet") : j);
}

Json names(const std::vector<int>& gens, const raag::IndependenceAlphabet& a) {
  Json out = Json::array();
  for (int g : gens) {
    out.push_back(a.name(g));
  }
  return out;
}

int run_classify(const Common& c) {
  const auto alpha = load_alphabet(raag::read_json_file(c.input));
  const auto cls = raag::classify(alpha);
  Json j;
  j["class"] = raag::to_string(cls.kind);
  if (cls.kind == raag::GraphKind::General) {
    j["witness"] = names({cls.witness.begin(), cls.witness.end()}, alpha);
  } else {
    j["witness"] = nullptr;
  }
  emit(j, c);
  return kDecided;
}

int run_decompose(const Common& c) {
  const auto alpha = load_alphabet(raag::read_json_file(c.input));
  const auto tree = raag::decompose(alpha);
  Json j;
  j["expression"] = raag::to_string(tree, alpha);
  j["tree"] = raag::to_json(tree, alpha);
  j["apexes"] = names(raag::flatten(tree), alpha);
  emit(j, c);
  return kDecided;
}

int run_wp(const Common& c, const std::string& word, const std::string& alg) {
  const auto alpha = load_alphabet(raag::read_json_file(c.input));
  const auto w = raag::word_from_json(raag::parse_json(word), alpha);
  bool identity = false;
  if (alg == "stacked") {
    identity = raag::is_identity_stacked(w, raag::decompose(alpha));
  } else {
    identity = raag::is_identity(w, alpha);
  }
  emit(Json{{"identity", identity}}, c);
  return kDecided;
}

int run_trace_eq(const Common& c, const std::string& left,
                 const std::string& right) {
  const auto alpha = load_alphabet(raag::read_json_file(c.input));
  auto parse = [&](const std::string& s) {
    const Json j = raag::parse_json(s);
    if (!j.is_array()) {
      throw raag::InvalidInput("a word must be a JSON array");
    }
    return raag::parse_monoid_word(j.get<std::vector<std::string>>(), alpha);
  };
  const auto u = parse(left);
  const auto v = parse(right);
  Json j;
  j["equal"] = raag::traces_equal(u, v, alpha);
  Json steps = Json::array();
  for (const auto& step : raag::foata_normal_form(u, alpha)) {
    steps.push_back(raag::format_monoid_word(step, alpha));
  }
  j["left_normal_form"] = steps;
  emit(j, c);
  return kDecided;
}

int run_solve(const Common& c, const std::string& mode, long long ceiling) {
  auto eq = raag::equation_from_json(raag::read_json_file(c.input));
  if (!mode.empty()) {
    eq.mode = raag::parse_mode(mode);
  }
  raag::SolveOptions options;
  options.ceiling = ceiling;
  const auto out = raag::solve(eq, options);
  emit(raag::to_json(out), c);
  return out.status == raag::SolveStatus::Unknown ? kUnknown : kDecided;
}

int run_member(const Common& c, std::size_t node_cap) {
  const Json doc = raag::read_json_file(c.input);
  const auto alpha = load_alphabet(doc);
  const Json& aj = doc.contains("automaton") ? doc.at("automaton") : doc;
  const auto a = raag::automaton_from_json(aj, alpha);
  raag::MembershipOptions options;
  options.node_cap = node_cap;
  std::optional<raag::DecompositionTree> tree;
  if (raag::classify(alpha).kind != raag::GraphKind::General) {
    tree = raag::decompose(alpha);
  }
  const auto r =
      raag::membership_one(a, alpha, tree ? &*tree : nullptr, options);
  Json j;
  switch (r.status) {
    case raag::MembershipStatus::Found:
      j["member"] = true;
      j["witness"] = r.witness;
      break;
    case raag::MembershipStatus::NotFound:
      j["member"] = false;
      j["witness"] = nullptr;
      break;
    case raag::MembershipStatus::ResourceExhausted:
      j["member"] = nullptr;
      j["witness"] = nullptr;
      break;
  }
  j["nodes"] = r.nodes;
  emit(j, c);
  return r.status == raag::MembershipStatus::ResourceExhausted ? kUnknown
                                                               : kDecided;
}

int run_gen_sat(const Common& c) {
  const auto f = raag::parse_dimacs(read_text(c.input));
  emit(raag::to_json(raag::sat_to_p4_knapsack(f)), c);
  return kDecided;
}

int run_gen_f2(const Common& c) {
  const Json doc = raag::read_json_file(c.input);
  const auto alpha = doc.contains("alphabet") ? load_alphabet(doc)
                                              : raag::f2_alphabet();
  if (!(alpha == raag::f2_alphabet())) {
    throw raag::InvalidInput("the automaton must be over the free group on a, b");
  }
  const Json& aj = doc.contains("automaton") ? doc.at("automaton") : doc;
  const auto a = raag::automaton_from_json(aj, alpha);
  emit(raag::to_json(raag::acyclic_automaton_to_knapsack_f2(a)), c);
  return kDecided;
}

int run_brute(const Common& c, long long bound) {
  const auto eq = raag::equation_from_json(raag::read_json_file(c.input));
  const auto sols = raag::brute_force_solutions(eq, bound);
  Json list = Json::array();
  for (const auto& x : sols) {
    list.push_back(x);
  }
  emit(Json{{"variables", eq.distinct_variables()},
            {"bound", bound},
            {"count", sols.size()},
            {"solutions", list}},
       c);
  return kDecided;
}

int run_bound(const Common& c) {
  const auto eq = raag::equation_from_json(raag::read_json_file(c.input));
  const auto b = raag::tameness_bound(eq);
  emit(raag::to_json(b, eq.alphabet), c);
  return kDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knapsack and word problems over graph groups"};
  app.require_subcommand(1);

  Common classify_c, decompose_c, wp_c, trace_c, solve_c, member_c, sat_c,
      f2_c, brute_c, bound_c;
  std::string word, alg = "reduce", left, right, mode;
  long long ceiling = 1024;
  long long brute_bound = 0;
  std::size_t node_cap = 4'000'000;

  auto* classify = app.add_subcommand("classify", "complete, transitive forest or general");
  add_common(classify, classify_c);
  auto* decompose = app.add_subcommand("decompose", "transitive forest decomposition");
  add_common(decompose, decompose_c);
  auto* wp = app.add_subcommand("wp", "word problem");
  add_common(wp, wp_c);
  wp->add_option("--word", word, "JSON array of letters")->required();
  wp->add_option("--alg", alg)->check(CLI::IsMember({"reduce", "stacked"}));
  auto* trace = app.add_subcommand("trace-eq", "trace equivalence of two words");
  add_common(trace, trace_c);
  trace->add_option("--left", left)->required();
  trace->add_option("--right", right)->required();
  auto* solve = app.add_subcommand("solve", "decide an exponent equation");
  add_common(solve, solve_c);
  solve->add_option("--mode", mode)
      ->check(CLI::IsMember({"knapsack", "subsetsum", "integer"}));
  solve->add_option("--ceiling", ceiling)->check(CLI::NonNegativeNumber);
  auto* automaton = app.add_subcommand("automaton", "automaton problems");
  automaton->require_subcommand(1);
  auto* member = automaton->add_subcommand("member", "does the automaton accept a word equal to 1");
  add_common(member, member_c);
  member->add_option("--node-cap", node_cap);
  auto* gen = app.add_subcommand("gen", "hardness gadgets");
  gen->require_subcommand(1);
  auto* sat = gen->add_subcommand("sat-p4", "DIMACS CNF to a knapsack instance over P4");
  add_common(sat, sat_c);
  auto* f2 = gen->add_subcommand("f2-gadget", "acyclic automaton to a subset sum instance over F2");
  add_common(f2, f2_c);
  auto* oracle = app.add_subcommand("oracle", "reference oracles");
  oracle->require_subcommand(1);
  auto* brute = oracle->add_subcommand("brute", "all solutions with exponents up to a bound");
  add_common(brute, brute_c);
  brute->add_option("--bound", brute_bound)->required()->check(CLI::NonNegativeNumber);
  auto* bound = app.add_subcommand("bound", "tameness bound report");
  add_common(bound, bound_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*classify) return run_classify(classify_c);
    if (*decompose) return run_decompose(decompose_c);
    if (*wp) return run_wp(wp_c, word, alg);
    if (*trace) return run_trace_eq(trace_c, left, right);
    if (*solve) return run_solve(solve_c, mode, ceiling);
    if (*member) return run_member(member_c, node_cap);
    if (*sat) return run_gen_sat(sat_c);
    if (*f2) return run_gen_f2(f2_c);
    if (*brute) return run_brute(brute_c, brute_bound);
    if (*bound) return run_bound(bound_c);
  } catch (const raag::ResourceExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
