#pragma once

#include <memory>
#include <vector>

#include "rsg/alphabet.hpp"
#include "rsg/nfa.hpp"

namespace rsg::re {

// Small combinator language for building NFAs programmatically. This is how
// the benchmark generators and tests describe languages; there is no string
// syntax and no parser.
class Expr {
public:
    static Expr epsilon();
    static Expr none(); // empty language
    static Expr sym(Symbol s);
    static Expr any_of(std::vector<Symbol> symbols);
    static Expr seq(std::vector<Expr> parts);
    static Expr alt(std::vector<Expr> parts);
    static Expr star(Expr inner);
    static Expr plus(Expr inner);
    static Expr opt(Expr inner);
    static Expr times(Expr inner, int count);
    static Expr at_least(Expr inner, int count);

    struct Node;
    const Node& node() const { return *node_; }

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const Node> node_;
};

// Raw compiled form, independent of an Alphabet object; used when the symbol
// space is synthetic (e.g. transducer letter pairs).
struct RawNfa {
    int num_states = 0;
    State initial = 0;
    std::vector<Transition> transitions;
    std::vector<State> finals;
};

RawNfa compile_ids(const Expr& e, int num_symbols);
Nfa compile(const Expr& e, const Alphabet& alphabet);

} // namespace rsg::re
