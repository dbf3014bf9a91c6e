#pragma once

#include <string>

#include "rsg/dfa.hpp"
#include "rsg/nfa.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

// Graphviz exports: one node per state, doubled circles for accepting states,
// parallel edges merged with comma-joined labels.
std::string to_dot(const Nfa& a, const std::string& name = "automaton");
std::string to_dot(const Dfa& d, const std::string& name = "automaton");
std::string to_dot(const Transducer& t, const std::string& name = "transducer");

} // namespace rsg
