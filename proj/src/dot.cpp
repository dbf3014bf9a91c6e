#include "rsg/dot.hpp"

#include <map>
#include <sstream>

namespace rsg {

namespace {

void header(std::ostringstream& out, const std::string& name, State initial) {
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=none, label=\"\"];\n";
    out << "  __start -> q" << initial << ";\n";
}

void emit_edges(std::ostringstream& out, const std::map<std::pair<State, State>, std::string>& labels) {
    for (const auto& [edge, label] : labels)
        out << "  q" << edge.first << " -> q" << edge.second << " [label=\"" << label
            << "\"];\n";
}

} // namespace

std::string to_dot(const Nfa& a, const std::string& name) {
    std::ostringstream out;
    header(out, name, a.initial());
    for (State q = 0; q < a.num_states(); ++q)
        out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle")
            << ", label=\"s" << q << "\"];\n";
    std::map<std::pair<State, State>, std::string> labels;
    for (const Transition& t : a.transitions()) {
        std::string& label = labels[{t.src, t.dst}];
        if (!label.empty()) label += ",";
        label += a.alphabet().name(t.sym);
    }
    emit_edges(out, labels);
    out << "}\n";
    return out.str();
}

std::string to_dot(const Dfa& d, const std::string& name) { return to_dot(d.as_nfa(), name); }

std::string to_dot(const Transducer& t, const std::string& name) {
    std::ostringstream out;
    header(out, name, t.initial());
    for (State q = 0; q < t.num_states(); ++q)
        out << "  q" << q << " [shape=" << (t.is_final(q) ? "doublecircle" : "circle")
            << ", label=\"s" << q << "\"];\n";
    std::map<std::pair<State, State>, std::string> labels;
    for (const TransducerTransition& tr : t.transitions()) {
        std::string& label = labels[{tr.src, tr.dst}];
        if (!label.empty()) label += ",";
        label += t.alphabet().name(tr.in) + "/" + t.alphabet().name(tr.out);
    }
    emit_edges(out, labels);
    out << "}\n";
    return out.str();
}

} // namespace rsg
