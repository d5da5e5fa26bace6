#ifndef RAAG_TRACE_HPP_
#define RAAG_TRACE_HPP_

#include <string>
#include <vector>

#include "raag/alphabet.hpp"

namespace raag {

// Word over the generators, no inverses.  Letters are generator indices.
using MonoidWord = std::vector<int>;

// Foata steps; every step lists pairwise independent letters sorted by name.
using TraceNormalForm = std::vector<std::vector<int>>;

// Throws InvalidInput on unknown names.
MonoidWord parse_monoid_word(const std::vector<std::string>& names,
                             const IndependenceAlphabet& alpha);
std::vector<std::string> format_monoid_word(const MonoidWord& w,
                                            const IndependenceAlphabet& alpha);

TraceNormalForm foata_normal_form(const MonoidWord& w,
                                  const IndependenceAlphabet& alpha);

MonoidWord linearize(const TraceNormalForm& steps);

bool traces_equal(const MonoidWord& u, const MonoidWord& v,
                  const IndependenceAlphabet& alpha);

// Subsequence of w over {x, y}.  x == y keeps a single letter.  Throws
// InvalidInput when x and y are independent.
MonoidWord project(const MonoidWord& w, int x, int y,
                   const IndependenceAlphabet& alpha);

}  // namespace raag

#endif  // RAAG_TRACE_HPP_
