#ifndef RAAG_GROUP_HPP_
#define RAAG_GROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "raag/alphabet.hpp"

namespace raag {

struct Letter {
  int gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord power(const GroupWord& w, std::int64_t e);
void append_power(GroupWord& out, const GroupWord& w, std::int64_t e);

// Names like "a" and "a^-1".  Throws InvalidInput on unknown generators.
GroupWord parse_group_word(const std::vector<std::string>& names,
                           const IndependenceAlphabet& alpha);
std::vector<std::string> format_group_word(const GroupWord& w,
                                           const IndependenceAlphabet& alpha);
// Space separated, for diagnostics.
std::string to_string(const GroupWord& w, const IndependenceAlphabet& alpha);

// Geodesic representative in canonical step order.  Empty iff w = 1.
GroupWord reduce_word(const GroupWord& w, const IndependenceAlphabet& alpha);

// reduce_word for a word whose prefix `reduced` is already canonical.
GroupWord reduce_append(const GroupWord& reduced, const GroupWord& suffix,
                        const IndependenceAlphabet& alpha);

bool is_identity(const GroupWord& w, const IndependenceAlphabet& alpha);

// Appends to a reduced word, keeping it reduced but not canonically ordered.
void append_reduced(GroupWord& reduced, const GroupWord& suffix,
                    const IndependenceAlphabet& alpha);
// Canonical step order of a reduced word.
GroupWord canonical_form(const GroupWord& reduced,
                         const IndependenceAlphabet& alpha);

// Dense integer encoding of a canonical word, usable as a hash key.
std::vector<int> canonical_key(const GroupWord& reduced);

struct StackedStats {
  std::size_t pushes = 0;
  std::size_t resumes = 0;
};

// Recursive machine state following the decomposition tree.
struct StackedState {
  std::int64_t counter = 0;            // DirectZ
  std::vector<StackedState> child;     // DirectZ: the child; FreeProduct: active
  int active_factor = -1;              // FreeProduct
  std::vector<StackedState> suspended; // FreeProduct stack
  std::vector<int> suspended_factor;

  bool operator==(const StackedState&) const = default;
};

class StackedMachine {
 public:
  explicit StackedMachine(const DecompositionTree& tree);

  // Throws InvalidInput when the letter is outside the tree.
  void feed(Letter x);
  bool at_identity() const;
  const StackedState& state() const { return state_; }
  const StackedStats& stats() const { return stats_; }

 private:
  const DecompositionTree* tree_;
  StackedState state_;
  StackedStats stats_;
};

bool is_identity_stacked(const GroupWord& w, const DecompositionTree& tree,
                         StackedStats* stats = nullptr);

// Two-sided split of the generators of a free product; side is -1 for
// generators outside both factors.
struct FreeSplit {
  std::vector<int> side;

  int factor(int g) const { return side.at(g); }
  bool operator==(const FreeSplit&) const = default;
};

// Factor 0 = first child, factor 1 = the remaining children.
FreeSplit split_of(const DecompositionTree& free_node, std::size_t alphabet_size);

std::vector<GroupWord> syllables(const GroupWord& w, const FreeSplit& split);
std::size_t syllable_count(const GroupWord& w, const FreeSplit& split);

struct CyclicCore {
  GroupWord conjugator;  // f
  GroupWord core;        // g, with w = f^-1 g f
};

// Throws InvalidInput when w = 1.  The core starts and ends in different
// factors unless it is a single syllable.
CyclicCore cyclically_reduce(const GroupWord& w, const FreeSplit& split,
                             const IndependenceAlphabet& alpha);

}  // namespace raag

#endif  // RAAG_GROUP_HPP_
