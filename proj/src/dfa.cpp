#include "rsg/dfa.hpp"

#include "rsg/errors.hpp"

namespace rsg {

Dfa::Dfa(Alphabet alphabet, int num_states, State initial, std::vector<State> delta,
         std::vector<bool> finals)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      delta_(std::move(delta)),
      final_(std::move(finals)) {
    if (num_states_ <= 0) throw InputError("automaton needs at least one state");
    if (initial_ < 0 || initial_ >= num_states_) throw InputError("initial state out of range");
    const std::size_t expected =
        static_cast<std::size_t>(num_states_) * static_cast<std::size_t>(alphabet_.size());
    if (delta_.size() != expected)
        throw InputError("transition table must be total (one entry per state and symbol)");
    if (final_.size() != static_cast<std::size_t>(num_states_))
        throw InputError("final-state vector size mismatch");
    for (State q : delta_)
        if (q < 0 || q >= num_states_) throw InputError("transition target out of range");
}

State Dfa::run(const Word& w) const {
    State q = initial_;
    for (Symbol a : w) {
        if (a < 0 || a >= alphabet_.size()) throw InputError("symbol outside alphabet");
        q = next(q, a);
    }
    return q;
}

Nfa Dfa::as_nfa() const {
    std::vector<Transition> trans;
    trans.reserve(delta_.size());
    for (State q = 0; q < num_states_; ++q)
        for (Symbol a = 0; a < alphabet_.size(); ++a) trans.push_back({q, a, next(q, a)});
    std::vector<State> finals;
    for (State q = 0; q < num_states_; ++q)
        if (final_[static_cast<std::size_t>(q)]) finals.push_back(q);
    return Nfa(alphabet_, num_states_, initial_, std::move(trans), std::move(finals));
}

} // namespace rsg
