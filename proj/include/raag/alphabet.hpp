#ifndef RAAG_ALPHABET_HPP_
#define RAAG_ALPHABET_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

// Raised for malformed user input (alphabets, words, instances, files).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite simple graph (A, I).  Generators are addressed by their position
// in the input list; edges are commutation relations.
class IndependenceAlphabet {
 public:
  IndependenceAlphabet() = default;

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(int g) const { return names_.at(g); }

  // -1 when the name is unknown.
  int index_of(std::string_view name) const;

  // True iff (a, b) is in I.  Irreflexive.
  bool independent(int a, int b) const {
    return adjacency_[static_cast<std::size_t>(a) * names_.size() + b] != 0;
  }

  // Normalized edge list: pairs (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Rank of each generator under lexicographic order of names.
  int name_rank(int g) const { return name_rank_[g]; }

  // Subgraph induced on the given generators, in the given order.
  IndependenceAlphabet induced(const std::vector<int>& gens) const;

  bool operator==(const IndependenceAlphabet& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
  }

  friend IndependenceAlphabet validate_alphabet(
      const std::vector<std::string>& generators,
      const std::vector<std::pair<std::string, std::string>>& edges);

 private:
  std::vector<std::string> names_;
  std::vector<char> adjacency_;
  std::vector<int> name_rank_;
};

// Normalizes and checks a raw alphabet.  Throws InvalidInput on duplicate
// generators, self-loops, unknown endpoints or malformed names.
IndependenceAlphabet validate_alphabet(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<std::string, std::string>>& edges);

bool is_valid_generator_name(std::string_view name);

enum class GraphKind { Complete, TransitiveForestNotComplete, General };

enum class ForbiddenPattern { P4, C4 };

struct GraphClass {
  GraphKind kind = GraphKind::Complete;
  // Present iff kind == General.  For P4 the vertices are listed along the
  // path; for C4 around the cycle.
  std::optional<ForbiddenPattern> pattern;
  std::array<int, 4> witness{};
};

// Checks whether four vertices, in the given order, induce exactly the
// pattern (path a-b-c-d, resp. cycle a-b-c-d-a).
bool induces_pattern(const IndependenceAlphabet& alpha,
                     const std::array<int, 4>& v, ForbiddenPattern pattern);

GraphClass classify(const IndependenceAlphabet& alpha);

const char* to_string(GraphKind kind);

enum class NodeKind { Trivial, FreeProduct, DirectZ };

// Decomposition of a transitive forest into free products and direct
// products with Z.  Every node records the generators of its subgraph in
// input order.
struct DecompositionTree {
  NodeKind kind = NodeKind::Trivial;
  int apex = -1;  // DirectZ only
  std::vector<DecompositionTree> children;
  std::vector<int> generators;

  bool operator==(const DecompositionTree&) const = default;

  // Index of the child whose generator set contains g, or -1.
  int child_containing(int g) const;
  bool contains(int g) const;
};

class NotTransitiveForest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws NotTransitiveForest when the graph contains an induced P4 or C4.
DecompositionTree decompose(const IndependenceAlphabet& alpha);

// Generators at the leaves of the tree (apexes), in tree order.
std::vector<int> flatten(const DecompositionTree& tree);

// Edge set the tree encodes: each apex commutes with every generator below
// it; free factors do not commute.  Normalized like IndependenceAlphabet.
std::vector<std::pair<int, int>> implied_edges(const DecompositionTree& tree);

// Rendering such as "DirectZ(b, FreeProduct(DirectZ(a, 1), DirectZ(c, 1)))".
std::string to_string(const DecompositionTree& tree,
                      const IndependenceAlphabet& alpha);

}  // namespace raag

#endif  // RAAG_ALPHABET_HPP_
