#include "rsg/game.hpp"

#include <optional>
#include <sstream>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"
#include "rsg/format.hpp"

namespace rsg {

void validate_game(const RegularSafetyGame& game) {
    const Alphabet& alphabet = game.alphabet;
    if (game.v0.alphabet() != alphabet || game.v1.alphabet() != alphabet ||
        game.edges.alphabet() != alphabet || game.initial.alphabet() != alphabet ||
        game.bad.alphabet() != alphabet)
        throw InputError("all game components must share the alphabet");

    if (auto w = shortest_member(intersect(game.v0, game.v1)))
        throw InputError("V0 and V1 overlap; witness: '" + format_word(alphabet, *w) + "'");

    Dfa vertices = determinize(union_of(game.v0, game.v1));
    if (auto w = shortest_member(difference(game.initial, vertices)))
        throw InputError("initial set leaves V0 u V1; witness: '" +
                         format_word(alphabet, *w) + "'");
    if (auto w = shortest_member(difference(game.bad, vertices)))
        throw InputError("bad set leaves V0 u V1; witness: '" + format_word(alphabet, *w) +
                         "'");
}

RegularSafetyGame parse_game(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty game file");
    detail::BlockReader reader(lines);

    Alphabet alphabet = detail::parse_alphabet_line(reader.take());

    std::optional<Nfa> v0, v1, initial, bad;
    std::optional<Transducer> edges;
    while (!reader.done()) {
        const detail::Line& header = reader.take();
        const std::string& kind = header.tokens[0];
        if (kind == "automaton") {
            if (header.tokens.size() != 2)
                throw ParseError(header.number, "'automaton' header takes exactly one name");
            const std::string& name = header.tokens[1];
            Nfa parsed = detail::parse_automaton_body(reader, alphabet, header.number);
            std::optional<Nfa>* slot = nullptr;
            if (name == "V0") slot = &v0;
            else if (name == "V1") slot = &v1;
            else if (name == "I") slot = &initial;
            else if (name == "B") slot = &bad;
            else
                throw ParseError(header.number,
                                 "unknown automaton '" + name + "' (expected V0, V1, I, B)");
            if (slot->has_value())
                throw ParseError(header.number, "duplicate automaton '" + name + "'");
            slot->emplace(std::move(parsed));
        } else if (kind == "transducer") {
            if (header.tokens.size() != 2 || header.tokens[1] != "E")
                throw ParseError(header.number, "expected 'transducer E'");
            if (edges.has_value()) throw ParseError(header.number, "duplicate transducer 'E'");
            edges.emplace(detail::parse_transducer_body(reader, alphabet, header.number));
        } else {
            throw ParseError(header.number, "expected an 'automaton' or 'transducer' block");
        }
    }
    if (!v0) throw ParseError(0, "missing 'automaton V0' block");
    if (!v1) throw ParseError(0, "missing 'automaton V1' block");
    if (!initial) throw ParseError(0, "missing 'automaton I' block");
    if (!bad) throw ParseError(0, "missing 'automaton B' block");
    if (!edges) throw ParseError(0, "missing 'transducer E' block");

    RegularSafetyGame game{std::move(alphabet), std::move(*v0),   std::move(*v1),
                           std::move(*edges),   std::move(*initial), std::move(*bad)};
    validate_game(game);
    return game;
}

std::string render_game(const RegularSafetyGame& game) {
    std::ostringstream out;
    render_alphabet(out, game.alphabet);
    render_automaton(out, "V0", game.v0);
    render_automaton(out, "V1", game.v1);
    render_automaton(out, "I", game.initial);
    render_automaton(out, "B", game.bad);
    render_transducer(out, "E", game.edges);
    return out.str();
}

bool is_vertex(const RegularSafetyGame& game, const Word& w) {
    return accepts(game.v0, w) || accepts(game.v1, w);
}

Dfa parse_certificate(std::string_view text, const Alphabet& expected) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty certificate file");
    detail::BlockReader reader(lines);

    Alphabet alphabet = detail::parse_alphabet_line(reader.take());
    if (alphabet != expected)
        throw InputError("certificate alphabet does not match the game's alphabet");

    if (reader.done()) throw ParseError(0, "missing 'automaton W' block");
    const detail::Line& header = reader.take();
    if (header.tokens.size() != 2 || header.tokens[0] != "automaton" ||
        header.tokens[1] != "W")
        throw ParseError(header.number, "expected 'automaton W'");
    Nfa parsed = detail::parse_automaton_body(reader, alphabet, header.number);
    if (!reader.done())
        throw ParseError(reader.peek().number, "unexpected content after certificate block");
    return determinize(parsed);
}

std::string render_certificate(const Dfa& certificate) {
    std::ostringstream out;
    render_alphabet(out, certificate.alphabet());
    render_automaton(out, "W", certificate.as_nfa());
    return out.str();
}

} // namespace rsg
