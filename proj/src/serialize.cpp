#include "raag/serialize.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace raag {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + what + "' has the wrong type");
  }
}

int state_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw InvalidInput(std::string("field '") + what + "' must be an integer");
  }
  return j.get<int>();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("expected an integer");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

IndependenceAlphabet alphabet_from_json(const Json& j) {
  const auto gens =
      get_as<std::vector<std::string>>(field(j, "generators"), "generators");
  std::vector<std::pair<std::string, std::string>> edges;
  const Json& e = j.contains("edges") ? j.at("edges") : Json::array();
  if (!e.is_array()) {
    throw InvalidInput("field 'edges' must be an array");
  }
  for (const auto& pair : e) {
    const auto ends = get_as<std::vector<std::string>>(pair, "edges");
    if (ends.size() != 2) {
      throw InvalidInput("edges must have two endpoints");
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  return validate_alphabet(gens, edges);
}

Json to_json(const IndependenceAlphabet& alpha) {
  Json edges = Json::array();
  for (const auto& [i, j] : alpha.edges()) {
    edges.push_back({alpha.name(i), alpha.name(j)});
  }
  return Json{{"generators", alpha.generators()}, {"edges", edges}};
}

GroupWord word_from_json(const Json& j, const IndependenceAlphabet& alpha) {
  return parse_group_word(get_as<std::vector<std::string>>(j, "word"), alpha);
}

Json to_json(const GroupWord& w, const IndependenceAlphabet& alpha) {
  return Json(format_group_word(w, alpha));
}

WordAutomaton automaton_from_json(const Json& j,
                                  const IndependenceAlphabet& alpha) {
  WordAutomaton a;
  a.states = state_from_json(field(j, "states"), "states");
  a.initial = state_from_json(field(j, "initial"), "initial");
  for (const auto& f : field(j, "finals")) {
    a.finals.push_back(state_from_json(f, "finals"));
  }
  if (j.contains("transitions")) {
    for (const auto& t : j.at("transitions")) {
      a.transitions.push_back({state_from_json(field(t, "from"), "from"),
                               state_from_json(field(t, "to"), "to"),
                               word_from_json(field(t, "label"), alpha)});
    }
  }
  if (j.contains("loops")) {
    for (const auto& l : j.at("loops")) {
      const int q = state_from_json(field(l, "state"), "state");
      a.transitions.push_back({q, q, word_from_json(field(l, "label"), alpha)});
    }
  }
  validate_automaton(a, alpha);
  return a;
}

Json to_json(const WordAutomaton& a, const IndependenceAlphabet& alpha) {
  Json transitions = Json::array();
  Json loops = Json::array();
  for (const auto& t : a.transitions) {
    if (t.from == t.to) {
      loops.push_back({{"state", t.from}, {"label", to_json(t.label, alpha)}});
    } else {
      transitions.push_back({{"from", t.from},
                             {"to", t.to},
                             {"label", to_json(t.label, alpha)}});
    }
  }
  return Json{{"states", a.states},
              {"initial", a.initial},
              {"finals", a.finals},
              {"transitions", transitions},
              {"loops", loops}};
}

ExponentEquation equation_from_json(const Json& j) {
  ExponentEquation eq;
  eq.alphabet = alphabet_from_json(field(j, "alphabet"));
  for (const auto& w : field(j, "constants")) {
    eq.constants.push_back(word_from_json(w, eq.alphabet));
  }
  for (const auto& w : field(j, "cycles")) {
    eq.cycles.push_back(word_from_json(w, eq.alphabet));
  }
  eq.variables =
      get_as<std::vector<std::string>>(field(j, "variables"), "variables");
  if (j.contains("mode")) {
    eq.mode = parse_mode(get_as<std::string>(j.at("mode"), "mode"));
  }
  validate_equation(eq);
  return eq;
}

Json to_json(const ExponentEquation& eq) {
  Json constants = Json::array();
  for (const auto& w : eq.constants) {
    constants.push_back(to_json(w, eq.alphabet));
  }
  Json cycles = Json::array();
  for (const auto& w : eq.cycles) {
    cycles.push_back(to_json(w, eq.alphabet));
  }
  return Json{{"alphabet", to_json(eq.alphabet)},
              {"constants", constants},
              {"cycles", cycles},
              {"variables", eq.variables},
              {"mode", to_string(eq.mode)}};
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(to_json(x));
  }
  return out;
}

Json to_json(const SemilinearSet& s) {
  Json comps = Json::array();
  for (const auto& c : s.components) {
    Json periods = Json::array();
    for (const auto& p : c.periods) {
      periods.push_back(to_json(p));
    }
    comps.push_back({{"base", to_json(c.base)}, {"periods", periods}});
  }
  return Json{{"dim", s.dim}, {"components", comps}};
}

SemilinearSet semilinear_from_json(const Json& j) {
  SemilinearSet s;
  auto vec = [](const Json& v) {
    IntVector out;
    for (const auto& x : v) {
      out.push_back(bigint_from_json(x));
    }
    return out;
  };
  bool have_dim = false;
  if (j.contains("dim")) {
    s.dim = get_as<std::size_t>(j.at("dim"), "dim");
    have_dim = true;
  }
  for (const auto& c : field(j, "components")) {
    LinearSet l;
    l.base = vec(field(c, "base"));
    if (c.contains("periods")) {
      for (const auto& p : c.at("periods")) {
        l.periods.push_back(vec(p));
      }
    }
    if (!have_dim) {
      s.dim = l.base.size();
      have_dim = true;
    }
    if (l.base.size() != s.dim) {
      throw InvalidInput("component of the wrong dimension");
    }
    for (const auto& p : l.periods) {
      if (p.size() != s.dim) {
        throw InvalidInput("period of the wrong dimension");
      }
    }
    s.components.push_back(std::move(l));
  }
  return s;
}

Json to_json(const SolveOutcome& out) {
  Json j;
  j["status"] = to_string(out.status);
  if (out.status == SolveStatus::Solvable) {
    Json assignment = Json::object();
    for (std::size_t i = 0; i < out.variables.size(); ++i) {
      assignment[out.variables[i]] = out.assignment.at(i);
    }
    j["assignment"] = assignment;
  } else {
    j["assignment"] = nullptr;
  }
  j["bound"] = out.bound ? to_json(*out.bound) : Json(nullptr);
  if (!out.bound_source.empty()) {
    j["bound_source"] = out.bound_source;
  }
  j["budget"] = to_json(out.budget);
  j["method"] = out.method;
  return j;
}

Json to_json(const DecompositionTree& tree, const IndependenceAlphabet& alpha) {
  Json j;
  switch (tree.kind) {
    case NodeKind::Trivial:
      j["kind"] = "trivial";
      break;
    case NodeKind::DirectZ:
      j["kind"] = "direct_z";
      j["apex"] = alpha.name(tree.apex);
      break;
    case NodeKind::FreeProduct:
      j["kind"] = "free_product";
      break;
  }
  Json gens = Json::array();
  for (int g : tree.generators) {
    gens.push_back(alpha.name(g));
  }
  j["generators"] = gens;
  Json children = Json::array();
  for (const auto& c : tree.children) {
    children.push_back(to_json(c, alpha));
  }
  j["children"] = children;
  return j;
}

namespace {

Json tameness_node_json(const TamenessNode& node,
                        const IndependenceAlphabet& alpha) {
  Json j;
  j["kind"] = node.kind == NodeKind::Trivial
                  ? "trivial"
                  : (node.kind == NodeKind::DirectZ ? "direct_z"
                                                    : "free_product");
  if (node.kind == NodeKind::DirectZ) {
    j["apex"] = alpha.name(node.apex);
  }
  j["value"] = to_json(node.value);
  j["inflated"] = to_json(node.inflated);
  Json children = Json::array();
  for (const auto& c : node.children) {
    children.push_back(tameness_node_json(c, alpha));
  }
  j["children"] = children;
  return j;
}

}  // namespace

Json to_json(const TamenessBound& bound, const IndependenceAlphabet& alpha) {
  return Json{{"n", bound.n},
              {"k", bound.k},
              {"bound", to_json(bound.value)},
              {"inflated_bound", to_json(bound.inflated_value)},
              {"tree", tameness_node_json(bound.root, alpha)}};
}

Json to_json(const Cancellation& c) {
  Json out = Json::array();
  for (const auto& e : c) {
    Json edge = Json::array();
    for (int b : e) {
      edge.push_back(b + 1);
    }
    out.push_back(edge);
  }
  return out;
}

Cancellation cancellation_from_json(const Json& j) {
  Cancellation c;
  for (const auto& e : j) {
    Edge edge;
    for (const auto& b : e) {
      const int v = state_from_json(b, "block");
      if (v < 1) {
        throw InvalidInput("block indices are 1-based");
      }
      edge.push_back(v - 1);
    }
    c.push_back(std::move(edge));
  }
  return c;
}

Json to_json(const GadgetInstance& g) {
  Json j = to_json(g.equation);
  j["budget"] = g.budget;
  j["budgets"] = g.budgets;
  j["provenance"] = g.provenance;
  return j;
}

}  // namespace raag
