#pragma once

#include <vector>

#include "rsg/alphabet.hpp"
#include "rsg/nfa.hpp"

namespace rsg {

// Deterministic, structurally complete automaton: exactly one transition per
// (state, symbol) pair. Completeness is enforced by construction, which makes
// complement total and language differences safe.
class Dfa {
public:
    Dfa(Alphabet alphabet, int num_states, State initial,
        std::vector<State> delta /* row-major num_states x |alphabet| */,
        std::vector<bool> finals);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    State initial() const { return initial_; }
    bool is_final(State q) const { return final_[static_cast<std::size_t>(q)]; }

    State next(State q, Symbol a) const {
        return delta_[static_cast<std::size_t>(q) * static_cast<std::size_t>(alphabet_.size()) +
                      static_cast<std::size_t>(a)];
    }

    State run(const Word& w) const;

    Nfa as_nfa() const;

private:
    Alphabet alphabet_;
    int num_states_ = 0;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<bool> final_;
};

} // namespace rsg
