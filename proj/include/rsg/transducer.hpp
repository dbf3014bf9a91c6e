#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsg/alphabet.hpp"
#include "rsg/automaton_ops.hpp"
#include "rsg/nfa.hpp"
#include "rsg/re.hpp"

namespace rsg {

struct TransducerTransition {
    State src;
    Symbol in;
    Symbol out;
    State dst;

    friend bool operator==(const TransducerTransition&, const TransducerTransition&) = default;
};

// Length-preserving transducer: every transition consumes exactly one input
// symbol and emits exactly one output symbol, so the defined relation only
// ever pairs words of equal length.
class Transducer {
public:
    Transducer(Alphabet alphabet, int num_states, State initial,
               std::vector<TransducerTransition> transitions, std::vector<State> finals);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return static_cast<int>(adj_.size()); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return final_[static_cast<std::size_t>(q)]; }

    struct Arc {
        Symbol in;
        Symbol out;
        State dst;
    };

    std::span<const Arc> arcs_from(State q) const {
        const auto& row = adj_[static_cast<std::size_t>(q)];
        return {row.data(), row.size()};
    }

    // Arcs with the given input symbol; rows are sorted by (in, out, dst).
    std::span<const Arc> arcs_from_in(State q, Symbol in) const {
        const auto& row = adj_[static_cast<std::size_t>(q)];
        auto lo = std::lower_bound(row.begin(), row.end(), in,
                                   [](const Arc& arc, Symbol s) { return arc.in < s; });
        std::size_t start = static_cast<std::size_t>(lo - row.begin());
        std::size_t count = 0;
        while (start + count < row.size() && row[start + count].in == in) ++count;
        return {row.data() + start, count};
    }

    std::vector<TransducerTransition> transitions() const;
    std::size_t transition_count() const;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<std::vector<Arc>> adj_; // sorted by (in, out, dst)
    std::vector<bool> final_;
};

bool relates(const Transducer& t, const Word& u, const Word& v);

// All v with (u, v) in the relation, in lexicographic order. The budget caps
// the number of produced words.
std::vector<Word> successors(const Transducer& t, const Word& u,
                             std::size_t budget = kDefaultBudget);

// Symbolic image/preimage as reachable product constructions; never by
// enumeration, so they are independent of word length.
Nfa post_image(const Transducer& t, const Nfa& a);
Nfa pre_image(const Transducer& t, const Nfa& a);

namespace te {

// Expression helpers over letter pairs. in/out pairs are packed into a single
// synthetic symbol space of size |alphabet|^2; compile() unpacks them.
re::Expr pair(const Alphabet& alphabet, Symbol in, Symbol out);
re::Expr copy_any(const Alphabet& alphabet, const std::vector<Symbol>& symbols);
re::Expr copy_all(const Alphabet& alphabet);
re::Expr map_any(const Alphabet& alphabet,
                 const std::vector<std::pair<Symbol, Symbol>>& pairs);

Transducer compile(const re::Expr& e, const Alphabet& alphabet);

} // namespace te

} // namespace rsg
