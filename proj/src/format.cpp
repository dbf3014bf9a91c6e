#include "rsg/format.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "rsg/errors.hpp"

namespace rsg {

namespace {

std::string state_name(State q) { return "s" + std::to_string(q); }

} // namespace

void render_alphabet(std::ostream& out, const Alphabet& alphabet) {
    out << "alphabet:";
    for (const std::string& s : alphabet.symbols()) out << ' ' << s;
    out << '\n';
}

void render_automaton(std::ostream& out, std::string_view name, const Nfa& a) {
    out << "automaton " << name << '\n';
    out << "states:";
    for (State q = 0; q < a.num_states(); ++q) out << ' ' << state_name(q);
    out << '\n';
    out << "initial: " << state_name(a.initial()) << '\n';
    out << "accepting:";
    for (State q : a.final_states()) out << ' ' << state_name(q);
    out << '\n';
    for (const Transition& t : a.transitions())
        out << "trans: " << state_name(t.src) << ' ' << a.alphabet().name(t.sym) << ' '
            << state_name(t.dst) << '\n';
}

void render_transducer(std::ostream& out, std::string_view name, const Transducer& t) {
    out << "transducer " << name << '\n';
    out << "states:";
    for (State q = 0; q < t.num_states(); ++q) out << ' ' << state_name(q);
    out << '\n';
    out << "initial: " << state_name(t.initial()) << '\n';
    out << "accepting:";
    for (State q = 0; q < t.num_states(); ++q)
        if (t.is_final(q)) out << ' ' << state_name(q);
    out << '\n';
    for (const TransducerTransition& tr : t.transitions())
        out << "trans: " << state_name(tr.src) << ' ' << t.alphabet().name(tr.in) << '/'
            << t.alphabet().name(tr.out) << ' ' << state_name(tr.dst) << '\n';
}

namespace detail {

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                             : end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        std::string token;
        while (in >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

Alphabet parse_alphabet_line(const Line& line) {
    if (line.tokens.empty() || line.tokens[0] != "alphabet:")
        throw ParseError(line.number, "expected 'alphabet:' line");
    if (line.tokens.size() < 2)
        throw ParseError(line.number, "alphabet must contain at least one symbol");
    std::vector<std::string> symbols(line.tokens.begin() + 1, line.tokens.end());
    try {
        return Alphabet(std::move(symbols));
    } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
    }
}

namespace {

struct BlockLines {
    const Line* states = nullptr;
    const Line* initial = nullptr;
    const Line* accepting = nullptr;
    std::vector<const Line*> trans;
};

// A block body ends at the next `automaton`/`transducer` header or EOF.
BlockLines collect_body(BlockReader& reader, int header_line) {
    BlockLines body;
    while (!reader.done()) {
        const Line& line = reader.peek();
        const std::string& key = line.tokens[0];
        if (key == "automaton" || key == "transducer") break;
        if (key == "states:") {
            if (body.states) throw ParseError(line.number, "duplicate 'states:' line");
            body.states = &reader.take();
        } else if (key == "initial:") {
            if (body.initial) throw ParseError(line.number, "duplicate 'initial:' line");
            body.initial = &reader.take();
        } else if (key == "accepting:") {
            if (body.accepting) throw ParseError(line.number, "duplicate 'accepting:' line");
            body.accepting = &reader.take();
        } else if (key == "trans:") {
            body.trans.push_back(&reader.take());
        } else {
            throw ParseError(line.number, "unexpected '" + key + "' inside block");
        }
    }
    if (!body.states) throw ParseError(header_line, "block is missing a 'states:' line");
    if (!body.initial) throw ParseError(header_line, "block is missing an 'initial:' line");
    return body;
}

std::map<std::string, State> intern_states(const Line& states_line) {
    std::map<std::string, State> ids;
    for (std::size_t i = 1; i < states_line.tokens.size(); ++i) {
        const std::string& name = states_line.tokens[i];
        if (!ids.emplace(name, static_cast<State>(ids.size())).second)
            throw ParseError(states_line.number, "duplicate state '" + name + "'");
    }
    if (ids.empty()) throw ParseError(states_line.number, "block declares no states");
    return ids;
}

State lookup_state(const std::map<std::string, State>& ids, const std::string& name,
                   int line) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError(line, "unknown state '" + name + "'");
    return it->second;
}

Symbol lookup_symbol(const Alphabet& alphabet, const std::string& name, int line) {
    auto sym = alphabet.find(name);
    if (!sym) throw ParseError(line, "unknown symbol '" + name + "'");
    return *sym;
}

} // namespace

Nfa parse_automaton_body(BlockReader& reader, const Alphabet& alphabet, int header_line) {
    BlockLines body = collect_body(reader, header_line);
    auto ids = intern_states(*body.states);

    if (body.initial->tokens.size() != 2)
        throw ParseError(body.initial->number, "'initial:' takes exactly one state");
    State initial = lookup_state(ids, body.initial->tokens[1], body.initial->number);

    std::vector<State> finals;
    if (body.accepting)
        for (std::size_t i = 1; i < body.accepting->tokens.size(); ++i)
            finals.push_back(
                lookup_state(ids, body.accepting->tokens[i], body.accepting->number));

    std::vector<Transition> trans;
    for (const Line* line : body.trans) {
        if (line->tokens.size() != 4)
            throw ParseError(line->number, "automaton transition needs 'trans: src sym dst'");
        trans.push_back({lookup_state(ids, line->tokens[1], line->number),
                         lookup_symbol(alphabet, line->tokens[2], line->number),
                         lookup_state(ids, line->tokens[3], line->number)});
    }
    return Nfa(alphabet, static_cast<int>(ids.size()), initial, std::move(trans),
               std::move(finals));
}

Transducer parse_transducer_body(BlockReader& reader, const Alphabet& alphabet,
                                 int header_line) {
    BlockLines body = collect_body(reader, header_line);
    auto ids = intern_states(*body.states);

    if (body.initial->tokens.size() != 2)
        throw ParseError(body.initial->number, "'initial:' takes exactly one state");
    State initial = lookup_state(ids, body.initial->tokens[1], body.initial->number);

    std::vector<State> finals;
    if (body.accepting)
        for (std::size_t i = 1; i < body.accepting->tokens.size(); ++i)
            finals.push_back(
                lookup_state(ids, body.accepting->tokens[i], body.accepting->number));

    std::vector<TransducerTransition> trans;
    for (const Line* line : body.trans) {
        if (line->tokens.size() != 4)
            throw ParseError(line->number,
                             "transducer transition needs 'trans: src in/out dst'");
        const std::string& label = line->tokens[2];
        auto slash = label.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == label.size())
            throw ParseError(line->number, "transducer label must look like 'in/out'");
        trans.push_back({lookup_state(ids, line->tokens[1], line->number),
                         lookup_symbol(alphabet, label.substr(0, slash), line->number),
                         lookup_symbol(alphabet, label.substr(slash + 1), line->number),
                         lookup_state(ids, line->tokens[3], line->number)});
    }
    return Transducer(alphabet, static_cast<int>(ids.size()), initial, std::move(trans),
                      std::move(finals));
}

} // namespace detail

} // namespace rsg
