#include "raag/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace raag {

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

int IndependenceAlphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::vector<std::pair<int, int>> IndependenceAlphabet::edges() const {
  std::vector<std::pair<int, int>> result;
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (independent(i, j)) {
        result.emplace_back(i, j);
      }
    }
  }
  return result;
}

namespace {

std::vector<int> ranks_of(const std::vector<std::string>& names) {
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> rank(names.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = static_cast<int>(r);
  }
  return rank;
}

}  // namespace

IndependenceAlphabet IndependenceAlphabet::induced(
    const std::vector<int>& gens) const {
  IndependenceAlphabet sub;
  const std::size_t n = gens.size();
  sub.names_.reserve(n);
  for (int g : gens) {
    sub.names_.push_back(names_.at(g));
  }
  sub.adjacency_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sub.adjacency_[i * n + j] = independent(gens[i], gens[j]) ? 1 : 0;
    }
  }
  sub.name_rank_ = ranks_of(sub.names_);
  return sub;
}

IndependenceAlphabet validate_alphabet(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  IndependenceAlphabet alpha;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!is_valid_generator_name(g)) {
      throw InvalidInput("invalid generator name '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw InvalidInput("duplicate generator '" + g + "'");
    }
  }
  alpha.names_ = generators;
  const std::size_t n = generators.size();
  alpha.adjacency_.assign(n * n, 0);
  for (const auto& [x, y] : edges) {
    const int i = alpha.index_of(x);
    const int j = alpha.index_of(y);
    if (i < 0 || j < 0) {
      throw InvalidInput("edge endpoint unknown: (" + x + ", " + y + ")");
    }
    if (i == j) {
      throw InvalidInput("self-loop edge on '" + x + "'");
    }
    alpha.adjacency_[i * n + j] = 1;
    alpha.adjacency_[j * n + i] = 1;
  }
  alpha.name_rank_ = ranks_of(alpha.names_);
  return alpha;
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Complete:
      return "complete";
    case GraphKind::TransitiveForestNotComplete:
      return "transitive_forest";
    case GraphKind::General:
      return "general";
  }
  return "?";
}

bool induces_pattern(const IndependenceAlphabet& alpha,
                     const std::array<int, 4>& v, ForbiddenPattern pattern) {
  // Required adjacency between positions i < j.
  auto wanted = [&](int i, int j) {
    if (j == i + 1) {
      return true;
    }
    return pattern == ForbiddenPattern::C4 && i == 0 && j == 3;
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (alpha.independent(v[i], v[j]) != wanted(i, j)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Orders the four vertices of an induced P4 or C4 along the path / cycle.
// Starts at the smallest endpoint (P4) or smallest vertex (C4) and walks
// towards the smaller neighbour.
std::array<int, 4> walk(const IndependenceAlphabet& alpha,
                        const std::array<int, 4>& quad, bool cycle) {
  auto degree = [&](int v) {
    int d = 0;
    for (int u : quad) {
      d += (u != v && alpha.independent(u, v)) ? 1 : 0;
    }
    return d;
  };
  int start = -1;
  for (int v : quad) {
    if (cycle || degree(v) == 1) {
      start = v;
      break;
    }
  }
  std::array<int, 4> path{start, -1, -1, -1};
  for (int pos = 1; pos < 4; ++pos) {
    for (int u : quad) {
      const bool used = std::find(path.begin(), path.begin() + pos, u) !=
                        path.begin() + pos;
      if (!used && alpha.independent(path[pos - 1], u)) {
        path[pos] = u;
        break;
      }
    }
  }
  return path;
}

}  // namespace

GraphClass classify(const IndependenceAlphabet& alpha) {
  const int n = static_cast<int>(alpha.size());
  GraphClass result;
  bool complete = true;
  for (int i = 0; i < n && complete; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!alpha.independent(i, j)) {
        complete = false;
        break;
      }
    }
  }
  if (complete) {
    result.kind = GraphKind::Complete;
    return result;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::array<int, 4> quad{a, b, c, d};
          int edges = 0;
          std::array<int, 4> deg{};
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (alpha.independent(quad[i], quad[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
            }
          }
          const bool all_two = std::all_of(deg.begin(), deg.end(),
                                           [](int x) { return x == 2; });
          const int ones =
              static_cast<int>(std::count(deg.begin(), deg.end(), 1));
          // Three edges with degrees {1,1,2,2} is a path; a triangle plus an
          // isolated vertex has degrees {2,2,2,0}.
          if (edges == 3 && ones == 2) {
            result.kind = GraphKind::General;
            result.pattern = ForbiddenPattern::P4;
            result.witness = walk(alpha, quad, false);
            return result;
          }
          if (edges == 4 && all_two) {
            result.kind = GraphKind::General;
            result.pattern = ForbiddenPattern::C4;
            result.witness = walk(alpha, quad, true);
            return result;
          }
        }
      }
    }
  }
  result.kind = GraphKind::TransitiveForestNotComplete;
  return result;
}

bool DecompositionTree::contains(int g) const {
  return std::find(generators.begin(), generators.end(), g) !=
         generators.end();
}

int DecompositionTree::child_containing(int g) const {
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].contains(g)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

namespace {

DecompositionTree decompose_subset(const IndependenceAlphabet& alpha,
                                   const std::vector<int>& vertices) {
  DecompositionTree node;
  node.generators = vertices;
  if (vertices.empty()) {
    node.kind = NodeKind::Trivial;
    return node;
  }

  // Connected components, each listed in input order; the components come
  // out ordered by their least member because we seed in input order.
  std::vector<std::vector<int>> components;
  std::vector<char> assigned(vertices.size(), 0);
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (assigned[s]) {
      continue;
    }
    std::vector<char> in_comp(vertices.size(), 0);
    std::vector<std::size_t> queue{s};
    in_comp[s] = assigned[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t t = 0; t < vertices.size(); ++t) {
        if (!assigned[t] &&
            alpha.independent(vertices[queue[head]], vertices[t])) {
          in_comp[t] = assigned[t] = 1;
          queue.push_back(t);
        }
      }
    }
    std::vector<int> comp;
    for (std::size_t t = 0; t < vertices.size(); ++t) {
      if (in_comp[t]) {
        comp.push_back(vertices[t]);
      }
    }
    components.push_back(std::move(comp));
  }

  if (components.size() > 1) {
    node.kind = NodeKind::FreeProduct;
    for (const auto& comp : components) {
      node.children.push_back(decompose_subset(alpha, comp));
    }
    return node;
  }

  for (int v : vertices) {
    const bool universal = std::all_of(
        vertices.begin(), vertices.end(),
        [&](int u) { return u == v || alpha.independent(u, v); });
    if (universal) {
      node.kind = NodeKind::DirectZ;
      node.apex = v;
      std::vector<int> rest;
      std::copy_if(vertices.begin(), vertices.end(), std::back_inserter(rest),
                   [v](int u) { return u != v; });
      node.children.push_back(decompose_subset(alpha, rest));
      return node;
    }
  }
  std::ostringstream msg;
  msg << "connected subgraph without a universal vertex:";
  for (int v : vertices) {
    msg << ' ' << alpha.name(v);
  }
  throw NotTransitiveForest(msg.str());
}

void collect_apexes(const DecompositionTree& node, std::vector<int>& out) {
  if (node.kind == NodeKind::DirectZ) {
    out.push_back(node.apex);
  }
  for (const auto& child : node.children) {
    collect_apexes(child, out);
  }
}

void collect_edges(const DecompositionTree& node,
                   std::vector<std::pair<int, int>>& out) {
  if (node.kind == NodeKind::DirectZ) {
    for (int g : node.generators) {
      if (g != node.apex) {
        out.emplace_back(std::min(g, node.apex), std::max(g, node.apex));
      }
    }
  }
  for (const auto& child : node.children) {
    collect_edges(child, out);
  }
}

}  // namespace

DecompositionTree decompose(const IndependenceAlphabet& alpha) {
  std::vector<int> all(alpha.size());
  std::iota(all.begin(), all.end(), 0);
  return decompose_subset(alpha, all);
}

std::vector<int> flatten(const DecompositionTree& tree) {
  std::vector<int> out;
  collect_apexes(tree, out);
  return out;
}

std::vector<std::pair<int, int>> implied_edges(const DecompositionTree& tree) {
  std::vector<std::pair<int, int>> out;
  collect_edges(tree, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const DecompositionTree& tree,
                      const IndependenceAlphabet& alpha) {
  switch (tree.kind) {
    case NodeKind::Trivial:
      return "1";
    case NodeKind::DirectZ:
      return "DirectZ(" + alpha.name(tree.apex) + ", " +
             to_string(tree.children.front(), alpha) + ")";
    case NodeKind::FreeProduct: {
      std::string s = "FreeProduct(";
      for (std::size_t i = 0; i < tree.children.size(); ++i) {
        if (i > 0) {
          s += ", ";
        }
        s += to_string(tree.children[i], alpha);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace raag
