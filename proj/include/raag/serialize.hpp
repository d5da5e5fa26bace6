#ifndef RAAG_SERIALIZE_HPP_
#define RAAG_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "raag/alphabet.hpp"
#include "raag/automata.hpp"
#include "raag/cancellation.hpp"
#include "raag/equation.hpp"
#include "raag/gadgets.hpp"
#include "raag/knapsack.hpp"
#include "raag/semilinear.hpp"

namespace raag {

using Json = nlohmann::ordered_json;

// All readers throw InvalidInput on malformed documents.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

IndependenceAlphabet alphabet_from_json(const Json& j);
Json to_json(const IndependenceAlphabet& alpha);

GroupWord word_from_json(const Json& j, const IndependenceAlphabet& alpha);
Json to_json(const GroupWord& w, const IndependenceAlphabet& alpha);

// Entries of "loops" become self-loop transitions.
WordAutomaton automaton_from_json(const Json& j,
                                  const IndependenceAlphabet& alpha);
Json to_json(const WordAutomaton& a, const IndependenceAlphabet& alpha);

ExponentEquation equation_from_json(const Json& j);
Json to_json(const ExponentEquation& eq);

// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const BigInt& v);
Json to_json(const IntVector& v);
Json to_json(const SemilinearSet& s);
SemilinearSet semilinear_from_json(const Json& j);

Json to_json(const SolveOutcome& out);
Json to_json(const DecompositionTree& tree, const IndependenceAlphabet& alpha);
Json to_json(const TamenessBound& bound, const IndependenceAlphabet& alpha);

// Block indices are written 1-based.
Json to_json(const Cancellation& c);
Cancellation cancellation_from_json(const Json& j);

Json to_json(const GadgetInstance& g);

}  // namespace raag

#endif  // RAAG_SERIALIZE_HPP_
