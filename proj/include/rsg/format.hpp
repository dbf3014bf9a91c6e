#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rsg/alphabet.hpp"
#include "rsg/nfa.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

// Line-oriented text format shared by game files and certificate files.
// Tokens are whitespace-separated, '#' starts a comment. An automaton block:
//
//   automaton V0
//   states: s0 s1
//   initial: s0
//   accepting: s1
//   trans: s0 a s1
//
// Transducer blocks use `transducer E` and `trans: src in/out dst`.

void render_automaton(std::ostream& out, std::string_view name, const Nfa& a);
void render_transducer(std::ostream& out, std::string_view name, const Transducer& t);
void render_alphabet(std::ostream& out, const Alphabet& alphabet);

namespace detail {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Comment-stripped, tokenized, blank lines dropped.
std::vector<Line> tokenize(std::string_view text);

class BlockReader {
public:
    explicit BlockReader(const std::vector<Line>& lines) : lines_(&lines) {}

    bool done() const { return pos_ >= lines_->size(); }
    const Line& peek() const { return (*lines_)[pos_]; }
    const Line& take() { return (*lines_)[pos_++]; }

private:
    const std::vector<Line>* lines_;
    std::size_t pos_ = 0;
};

Alphabet parse_alphabet_line(const Line& line);
Nfa parse_automaton_body(BlockReader& reader, const Alphabet& alphabet, int header_line);
Transducer parse_transducer_body(BlockReader& reader, const Alphabet& alphabet, int header_line);

} // namespace detail

} // namespace rsg
