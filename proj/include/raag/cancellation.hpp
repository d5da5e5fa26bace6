#ifndef RAAG_CANCELLATION_HPP_
#define RAAG_CANCELLATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "raag/equation.hpp"
#include "raag/group.hpp"
#include "raag/semilinear.hpp"

namespace raag {

// Free product instance: an equation with pairwise distinct variables whose
// alphabet splits into two factors.
struct FreeInstance {
  ExponentEquation equation;
  FreeSplit split;
};

struct Block {
  GroupWord word;
  int factor = 0;
  bool from_cycle = false;
  std::size_t piece = 0;     // i of v_i or of u_i (cycles 0-based)
  std::int64_t copy = 0;     // cycle blocks: which copy of u_i
  std::size_t syllable = 0;  // index inside the piece's syllables
};

using Blocks = std::vector<Block>;

// Throws InvalidInput unless every cycle is nonempty, reduced, and either a
// single syllable or starts and ends in different factors.
void check_format(const FreeInstance& inst);

Blocks block_factorize(const FreeInstance& inst, const Assignment& x);

// Blocks without provenance, one per word.
Blocks blocks_from_words(const std::vector<GroupWord>& words,
                         const FreeSplit& split);

GroupWord concatenate(const Blocks& blocks);

// Edges hold sorted 0-based block indices.
using Edge = std::vector<int>;
using Cancellation = std::vector<Edge>;

enum class Axiom { Partition, Consistent, Cancelling, WellNested, Maximal };
const char* to_string(Axiom a);

struct CancellationVerdict {
  bool ok = false;
  std::optional<Axiom> violated;
};

CancellationVerdict verify_cancellation(const Blocks& blocks,
                                        const Cancellation& c,
                                        const IndependenceAlphabet& alpha);

// Leftmost innermost peeling.  nullopt iff the blocks do not spell 1.
std::optional<Cancellation> find_cancellation(const Blocks& blocks,
                                              const IndependenceAlphabet& alpha);

struct MixedPeriod {
  std::size_t i = 0;  // i < j, both mixed cycles
  std::size_t j = 0;
  IntVector vector;

  bool operator==(const MixedPeriod&) const = default;
};

bool is_mixed(const FreeInstance& inst, std::size_t cycle);
std::vector<MixedPeriod> mixed_periods(const FreeInstance& inst);

struct CertifiedSolution {
  Assignment x;
  Blocks blocks;
  Cancellation cancellation;
};

// Throws InvalidInput when x is not a solution.
CertifiedSolution certify(const FreeInstance& inst, const Assignment& x);

struct CompatibleWitness {
  MixedPeriod period;
  int p = 0;  // u_i-block
  int q = 0;  // u_j-block
};

std::vector<CompatibleWitness> compatible_periods(const FreeInstance& inst,
                                                  const CertifiedSolution& s);

// Throws InvalidInput when the period is not compatible.
CertifiedSolution grow(const FreeInstance& inst, const CertifiedSolution& s,
                       const MixedPeriod& period);

std::int64_t mixed_norm(const FreeInstance& inst, const Assignment& x);

// (n + 3k + 1) + k n^2 for the instance.
BigInt shrink_threshold(const FreeInstance& inst);

struct ShrinkStep {
  MixedPeriod period;
  CertifiedSolution result;
};

// nullopt when the mixed norm does not exceed the threshold.  With
// `force`, shrinks whenever the block structure allows it.
std::optional<ShrinkStep> shrink(const FreeInstance& inst,
                                 const CertifiedSolution& s,
                                 bool force = false);

struct LocalCover {
  SemilinearSet cover;
  CertifiedSolution reduced;           // after shrinking
  std::vector<MixedPeriod> periods;    // compatible with `reduced`
};

// Throws InvalidInput when x is not a solution, and when a simple-cycle
// subinstance lives in a factor without an exact solution set.
LocalCover local_semilinear_cover(const FreeInstance& inst, const Assignment& x);

}  // namespace raag

#endif  // RAAG_CANCELLATION_HPP_
