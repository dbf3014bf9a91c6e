#pragma once

#include <string>
#include <string_view>

#include "rsg/alphabet.hpp"
#include "rsg/dfa.hpp"
#include "rsg/nfa.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

// A safety game over words: vertex sets and initial/bad sets as NFAs over a
// shared alphabet, the edge relation as a length-preserving transducer.
// Player 0 owns L(v0), Player 1 owns L(v1); edges are the transducer relation
// restricted to vertices.
struct RegularSafetyGame {
    Alphabet alphabet;
    Nfa v0;
    Nfa v1;
    Transducer edges;
    Nfa initial;
    Nfa bad;
};

// Structural and semantic validation: shared alphabet, disjoint vertex sets
// (shortest overlap witness reported), initial and bad contained in the
// vertex set. Throws InputError with a witness word on violation.
void validate_game(const RegularSafetyGame& game);

// Parses the normative game file format; runs validate_game on the result.
// Diagnostics carry 1-based line numbers.
RegularSafetyGame parse_game(std::string_view text);

std::string render_game(const RegularSafetyGame& game);

bool is_vertex(const RegularSafetyGame& game, const Word& w);

// Certificate files are an alphabet line plus one `automaton W` block. The
// automaton is determinized on load, so callers always get a complete DFA.
Dfa parse_certificate(std::string_view text, const Alphabet& expected);
std::string render_certificate(const Dfa& certificate);

} // namespace rsg
