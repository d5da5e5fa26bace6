#ifndef RAAG_AUTOMATA_HPP_
#define RAAG_AUTOMATA_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raag/alphabet.hpp"
#include "raag/group.hpp"

namespace raag {

struct Transition {
  int from = 0;
  int to = 0;
  GroupWord label;

  bool operator==(const Transition&) const = default;
};

// Self-loop transitions (from == to) model the loops of loop automata.
struct WordAutomaton {
  int states = 0;
  int initial = 0;
  std::vector<int> finals;
  std::vector<Transition> transitions;

  bool is_final(int q) const;
  bool operator==(const WordAutomaton&) const = default;
};

// Throws InvalidInput on out-of-range states or letters.
void validate_automaton(const WordAutomaton& a,
                        const IndependenceAlphabet& alpha);

struct AcyclicityEvidence {
  bool ok = false;
  std::vector<int> order;  // topological order when ok
  std::vector<int> cycle;  // states along a cycle when not ok
  std::string reason;
};

AcyclicityEvidence check_acyclic(const WordAutomaton& a);

// Allows at most one self-loop per state; the rest must be acyclic.
AcyclicityEvidence check_acyclic_loop(const WordAutomaton& a);

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExplorationOrder { Forward, Reverse };

struct MembershipOptions {
  std::size_t node_cap = 4'000'000;
  bool prune = true;
  ExplorationOrder order = ExplorationOrder::Forward;
};

enum class MembershipStatus { Found, NotFound, ResourceExhausted };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::NotFound;
  std::vector<int> witness;  // transition indices along the path
  std::size_t nodes = 0;
};

// Searches for a path from the initial state to a final state whose label
// is 1.  Throws InvalidInput on cyclic input.  When a tree is given the
// witness is re-checked with the stacked machine.
MembershipResult membership_one(const WordAutomaton& a,
                                const IndependenceAlphabet& alpha,
                                const DecompositionTree* tree = nullptr,
                                const MembershipOptions& options = {});

// Enumerates every accepting path.  Throws ResourceExhausted past path_cap.
bool membership_one_brute(const WordAutomaton& a,
                          const IndependenceAlphabet& alpha,
                          std::size_t path_cap = 1'000'000);

GroupWord path_label(const WordAutomaton& a, const std::vector<int>& path);

// Replaces every loop by a chain allowing 0..budget traversals.
WordAutomaton unroll_loops(const WordAutomaton& a, long budget);
WordAutomaton unroll_loops(const WordAutomaton& a,
                           const std::vector<long>& budget_per_state);

}  // namespace raag

#endif  // RAAG_AUTOMATA_HPP_
