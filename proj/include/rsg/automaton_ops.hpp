#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rsg/dfa.hpp"
#include "rsg/nfa.hpp"

namespace rsg {

// Default cap for explicit-state constructions (arena vertices, enumerated
// words, subset states). Configurable at every call site that can blow up.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

bool accepts(const Nfa& a, const Word& w);
bool accepts(const Dfa& d, const Word& w);

// Lazy subset construction; only subsets reachable from the initial one are
// materialized. The result is always complete (empty subset acts as sink).
Dfa determinize(const Nfa& a);

Dfa complement(const Dfa& d);

Nfa intersect(const Nfa& a, const Nfa& b);
Nfa intersect(const Nfa& a, const Dfa& b);
Nfa union_of(const Nfa& a, const Nfa& b);
Nfa difference(const Nfa& a, const Dfa& b);

// None iff the language is empty; otherwise a shortest member, ties broken by
// lexicographic order over the alphabet's declared symbol order.
std::optional<Word> shortest_member(const Nfa& a);
std::optional<Word> shortest_member(const Dfa& d);

// Partition refinement on the reachable part; canonical state numbering.
Dfa minimize(const Dfa& d);

// Exactly the accepted words of length n, in lexicographic order.
std::vector<Word> enumerate_length(const Nfa& a, int n, std::size_t budget = kDefaultBudget);

bool is_empty(const Nfa& a);
bool equivalent(const Nfa& a, const Nfa& b);

// Restriction to states that are reachable from the initial state and can
// reach a final state. Language-preserving; keeps at least the initial state.
Nfa trim(const Nfa& a);

} // namespace rsg
