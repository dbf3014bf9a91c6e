#include "rsg/nfa.hpp"

#include <algorithm>

#include "rsg/errors.hpp"

namespace rsg {

Nfa::Nfa(Alphabet alphabet, int num_states, State initial,
         std::vector<Transition> transitions, std::vector<State> finals)
    : alphabet_(std::move(alphabet)), initial_(initial) {
    if (num_states <= 0) throw InputError("automaton needs at least one state");
    if (initial < 0 || initial >= num_states) throw InputError("initial state out of range");
    adj_.resize(static_cast<std::size_t>(num_states));
    final_.assign(static_cast<std::size_t>(num_states), false);
    for (State f : finals) {
        if (f < 0 || f >= num_states) throw InputError("final state out of range");
        final_[static_cast<std::size_t>(f)] = true;
    }
    for (const Transition& t : transitions) {
        if (t.src < 0 || t.src >= num_states || t.dst < 0 || t.dst >= num_states)
            throw InputError("transition endpoint out of range");
        if (t.sym < 0 || t.sym >= alphabet_.size())
            throw InputError("transition symbol out of range");
        adj_[static_cast<std::size_t>(t.src)].emplace_back(t.sym, t.dst);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

std::vector<State> Nfa::final_states() const {
    std::vector<State> out;
    for (State q = 0; q < num_states(); ++q)
        if (final_[static_cast<std::size_t>(q)]) out.push_back(q);
    return out;
}

std::vector<Transition> Nfa::transitions() const {
    std::vector<Transition> out;
    for (State q = 0; q < num_states(); ++q)
        for (const auto& [sym, dst] : adj_[static_cast<std::size_t>(q)])
            out.push_back({q, sym, dst});
    return out;
}

std::size_t Nfa::transition_count() const {
    std::size_t n = 0;
    for (const auto& row : adj_) n += row.size();
    return n;
}

} // namespace rsg
