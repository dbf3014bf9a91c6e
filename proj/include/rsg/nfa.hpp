#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rsg/alphabet.hpp"

namespace rsg {

struct Transition {
    State src;
    Symbol sym;
    State dst;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Immutable nondeterministic finite automaton over a fixed alphabet.
// Transitions are stored per source state, sorted by (symbol, destination),
// so iteration order is deterministic everywhere.
class Nfa {
public:
    Nfa(Alphabet alphabet, int num_states, State initial,
        std::vector<Transition> transitions, std::vector<State> finals);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return static_cast<int>(adj_.size()); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return final_[static_cast<std::size_t>(q)]; }

    std::span<const std::pair<Symbol, State>> transitions_from(State q) const {
        const auto& row = adj_[static_cast<std::size_t>(q)];
        return {row.data(), row.size()};
    }

    template <typename F>
    void for_each_successor(State q, Symbol a, F&& f) const {
        const auto& row = adj_[static_cast<std::size_t>(q)];
        auto lo = std::lower_bound(row.begin(), row.end(),
                                   std::pair<Symbol, State>{a, -1});
        for (auto it = lo; it != row.end() && it->first == a; ++it) f(it->second);
    }

    std::vector<State> final_states() const;
    std::vector<Transition> transitions() const;
    std::size_t transition_count() const;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<std::vector<std::pair<Symbol, State>>> adj_;
    std::vector<bool> final_;
};

} // namespace rsg
