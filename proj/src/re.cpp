#include "rsg/re.hpp"

#include <algorithm>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"

namespace rsg::re {

struct Expr::Node {
    enum class Kind { Epsilon, None, Symbols, Seq, Alt, Star };
    Kind kind = Kind::Epsilon;
    std::vector<Symbol> symbols;
    std::vector<Expr> children;
};

namespace {

Expr make(Expr::Node node) { return Expr(std::make_shared<Expr::Node>(std::move(node))); }

} // namespace

Expr Expr::epsilon() { return make({Node::Kind::Epsilon, {}, {}}); }
Expr Expr::none() { return make({Node::Kind::None, {}, {}}); }

Expr Expr::sym(Symbol s) { return any_of({s}); }

Expr Expr::any_of(std::vector<Symbol> symbols) {
    if (symbols.empty()) return none();
    return make({Node::Kind::Symbols, std::move(symbols), {}});
}

Expr Expr::seq(std::vector<Expr> parts) {
    if (parts.empty()) return epsilon();
    return make({Node::Kind::Seq, {}, std::move(parts)});
}

Expr Expr::alt(std::vector<Expr> parts) {
    if (parts.empty()) return none();
    return make({Node::Kind::Alt, {}, std::move(parts)});
}

Expr Expr::star(Expr inner) { return make({Node::Kind::Star, {}, {std::move(inner)}}); }

Expr Expr::plus(Expr inner) { return seq({inner, star(inner)}); }

Expr Expr::opt(Expr inner) { return alt({epsilon(), std::move(inner)}); }

Expr Expr::times(Expr inner, int count) {
    std::vector<Expr> parts;
    for (int i = 0; i < count; ++i) parts.push_back(inner);
    return seq(std::move(parts));
}

Expr Expr::at_least(Expr inner, int count) { return seq({times(inner, count), star(inner)}); }

namespace {

// Thompson construction with explicit epsilon edges, eliminated afterwards.
struct EpsGraph {
    std::vector<std::vector<std::pair<Symbol, State>>> edges; // symbol -1 = epsilon
    State fresh() {
        edges.emplace_back();
        return static_cast<State>(edges.size()) - 1;
    }
    void link(State a, Symbol s, State b) { edges[static_cast<std::size_t>(a)].emplace_back(s, b); }
};

struct Fragment {
    State in;
    State out;
};

Fragment build(EpsGraph& g, const Expr& e) {
    using Kind = Expr::Node::Kind;
    const auto& node = e.node();
    switch (node.kind) {
        case Kind::Epsilon: {
            State q = g.fresh();
            return {q, q};
        }
        case Kind::None: {
            State in = g.fresh();
            State out = g.fresh();
            return {in, out};
        }
        case Kind::Symbols: {
            State in = g.fresh();
            State out = g.fresh();
            for (Symbol s : node.symbols) g.link(in, s, out);
            return {in, out};
        }
        case Kind::Seq: {
            Fragment first = build(g, node.children.front());
            Fragment acc = first;
            for (std::size_t i = 1; i < node.children.size(); ++i) {
                Fragment next = build(g, node.children[i]);
                g.link(acc.out, -1, next.in);
                acc.out = next.out;
            }
            return acc;
        }
        case Kind::Alt: {
            State in = g.fresh();
            State out = g.fresh();
            for (const Expr& child : node.children) {
                Fragment f = build(g, child);
                g.link(in, -1, f.in);
                g.link(f.out, -1, out);
            }
            return {in, out};
        }
        case Kind::Star: {
            State in = g.fresh();
            State out = g.fresh();
            Fragment f = build(g, node.children.front());
            g.link(in, -1, f.in);
            g.link(f.out, -1, out);
            g.link(in, -1, out);
            g.link(f.out, -1, f.in);
            return {in, out};
        }
    }
    throw ContractError("unreachable expression kind");
}

} // namespace

RawNfa compile_ids(const Expr& e, int num_symbols) {
    EpsGraph g;
    Fragment f = build(g, e);
    const int n = static_cast<int>(g.edges.size());

    // Epsilon closures.
    std::vector<std::vector<State>> closure(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<State> work{q};
        seen[static_cast<std::size_t>(q)] = 1;
        while (!work.empty()) {
            State cur = work.back();
            work.pop_back();
            closure[static_cast<std::size_t>(q)].push_back(cur);
            for (const auto& [sym, dst] : g.edges[static_cast<std::size_t>(cur)]) {
                if (sym == -1 && !seen[static_cast<std::size_t>(dst)]) {
                    seen[static_cast<std::size_t>(dst)] = 1;
                    work.push_back(dst);
                }
            }
        }
    }

    RawNfa raw;
    raw.num_states = n;
    raw.initial = f.in;
    std::vector<char> is_final(static_cast<std::size_t>(n), 0);
    for (State q = 0; q < n; ++q) {
        for (State c : closure[static_cast<std::size_t>(q)]) {
            if (c == f.out) is_final[static_cast<std::size_t>(q)] = 1;
            for (const auto& [sym, dst] : g.edges[static_cast<std::size_t>(c)]) {
                if (sym == -1) continue;
                if (sym < 0 || sym >= num_symbols)
                    throw InputError("expression symbol out of range");
                for (State target : closure[static_cast<std::size_t>(dst)])
                    raw.transitions.push_back({q, sym, target});
            }
        }
    }
    std::sort(raw.transitions.begin(), raw.transitions.end(),
              [](const Transition& a, const Transition& b) {
                  return std::tie(a.src, a.sym, a.dst) < std::tie(b.src, b.sym, b.dst);
              });
    raw.transitions.erase(std::unique(raw.transitions.begin(), raw.transitions.end()),
                          raw.transitions.end());
    for (State q = 0; q < n; ++q)
        if (is_final[static_cast<std::size_t>(q)]) raw.finals.push_back(q);
    return raw;
}

Nfa compile(const Expr& e, const Alphabet& alphabet) {
    RawNfa raw = compile_ids(e, alphabet.size());
    return trim(Nfa(alphabet, raw.num_states, raw.initial, std::move(raw.transitions),
                    std::move(raw.finals)));
}

} // namespace rsg::re
