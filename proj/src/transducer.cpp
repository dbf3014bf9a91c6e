#include "rsg/transducer.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "rsg/errors.hpp"

namespace rsg {

namespace {

void check_symbols(const Transducer& t, const Word& w) {
    for (Symbol s : w)
        if (s < 0 || s >= t.alphabet().size()) throw InputError("symbol outside alphabet");
}

} // namespace

Transducer::Transducer(Alphabet alphabet, int num_states, State initial,
                       std::vector<TransducerTransition> transitions, std::vector<State> finals)
    : alphabet_(std::move(alphabet)), initial_(initial) {
    if (num_states <= 0) throw InputError("transducer needs at least one state");
    if (initial < 0 || initial >= num_states) throw InputError("initial state out of range");
    adj_.resize(static_cast<std::size_t>(num_states));
    final_.assign(static_cast<std::size_t>(num_states), false);
    for (State f : finals) {
        if (f < 0 || f >= num_states) throw InputError("final state out of range");
        final_[static_cast<std::size_t>(f)] = true;
    }
    for (const TransducerTransition& t : transitions) {
        if (t.src < 0 || t.src >= num_states || t.dst < 0 || t.dst >= num_states)
            throw InputError("transition endpoint out of range");
        if (t.in < 0 || t.in >= alphabet_.size() || t.out < 0 || t.out >= alphabet_.size())
            throw InputError("transition symbol out of range");
        adj_[static_cast<std::size_t>(t.src)].push_back({t.in, t.out, t.dst});
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end(), [](const Arc& a, const Arc& b) {
            return std::tie(a.in, a.out, a.dst) < std::tie(b.in, b.out, b.dst);
        });
        row.erase(std::unique(row.begin(), row.end(),
                              [](const Arc& a, const Arc& b) {
                                  return a.in == b.in && a.out == b.out && a.dst == b.dst;
                              }),
                  row.end());
    }
}

std::vector<TransducerTransition> Transducer::transitions() const {
    std::vector<TransducerTransition> out;
    for (State q = 0; q < num_states(); ++q)
        for (const Arc& arc : adj_[static_cast<std::size_t>(q)])
            out.push_back({q, arc.in, arc.out, arc.dst});
    return out;
}

std::size_t Transducer::transition_count() const {
    std::size_t n = 0;
    for (const auto& row : adj_) n += row.size();
    return n;
}

bool relates(const Transducer& t, const Word& u, const Word& v) {
    check_symbols(t, u);
    check_symbols(t, v);
    if (u.size() != v.size()) return false;
    std::vector<State> current{t.initial()};
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<State> next;
        for (State q : current)
            for (const auto& arc : t.arcs_from(q))
                if (arc.in == u[i] && arc.out == v[i]) next.push_back(arc.dst);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) return false;
        current = std::move(next);
    }
    for (State q : current)
        if (t.is_final(q)) return true;
    return false;
}

std::vector<Word> successors(const Transducer& t, const Word& u, std::size_t budget) {
    check_symbols(t, u);
    const int n = static_cast<int>(u.size());
    const int states = t.num_states();
    const int sigma = t.alphabet().size();

    // alive[i*states + q]: some run from q over u[i..] reaches a final state.
    // Exact pruning: every surviving branch contributes at least one word.
    // Flat thread-local scratch keeps slice sweeps allocation-free.
    static thread_local std::vector<char> alive;
    alive.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(states), 0);
    auto alive_at = [&](int i, State q) -> char& {
        return alive[static_cast<std::size_t>(i) * static_cast<std::size_t>(states) +
                     static_cast<std::size_t>(q)];
    };
    for (State q = 0; q < states; ++q) alive_at(n, q) = t.is_final(q) ? 1 : 0;
    for (int i = n - 1; i >= 0; --i) {
        for (State q = 0; q < states; ++q) {
            char ok = 0;
            for (const auto& arc : t.arcs_from_in(q, u[static_cast<std::size_t>(i)])) {
                if (alive_at(i + 1, arc.dst)) {
                    ok = 1;
                    break;
                }
            }
            alive_at(i, q) = ok;
        }
    }

    std::vector<Word> result;
    if (!alive_at(0, t.initial())) return result;

    Word out;
    out.reserve(static_cast<std::size_t>(n));
    static thread_local std::vector<std::vector<State>> sets;
    if (sets.size() < static_cast<std::size_t>(n) + 1)
        sets.resize(static_cast<std::size_t>(n) + 1);
    sets[0] = {t.initial()};

    // Per-depth output buckets; only one node per depth is ever active, so
    // the buckets can be reused across siblings without clearing upfront.
    static thread_local std::vector<std::vector<State>> buckets;
    const std::size_t want = static_cast<std::size_t>(n) * static_cast<std::size_t>(sigma);
    if (buckets.size() < want) buckets.resize(want);

    // Recursive DFS over output symbols in alphabet order.
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (result.size() >= budget) throw BudgetError(budget, "successor enumeration");
            result.push_back(out);
            return;
        }
        const Symbol in = u[static_cast<std::size_t>(depth)];
        auto* local = buckets.data() +
                      static_cast<std::size_t>(depth) * static_cast<std::size_t>(sigma);
        for (Symbol b = 0; b < sigma; ++b) local[b].clear();
        for (State q : sets[static_cast<std::size_t>(depth)])
            for (const auto& arc : t.arcs_from_in(q, in))
                if (alive_at(depth + 1, arc.dst))
                    local[static_cast<std::size_t>(arc.out)].push_back(arc.dst);
        for (Symbol b = 0; b < sigma; ++b) {
            auto& next = local[static_cast<std::size_t>(b)];
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sets[static_cast<std::size_t>(depth) + 1].swap(next);
            out.push_back(b);
            self(self, depth + 1);
            out.pop_back();
        }
    };
    dfs(dfs, 0);
    return result;
}

namespace {

// Product of a transducer with an NFA, matching on one side of the letter
// pair and emitting the other.
Nfa image_product(const Transducer& t, const Nfa& a, bool match_input) {
    if (t.alphabet() != a.alphabet()) throw InputError("alphabet mismatch between automata");
    std::map<std::pair<State, State>, State> ids;
    std::vector<std::pair<State, State>> order;
    std::vector<Transition> trans;

    auto intern = [&](State qt, State qa) {
        auto [it, inserted] = ids.emplace(std::make_pair(qt, qa),
                                          static_cast<State>(order.size()));
        if (inserted) order.emplace_back(qt, qa);
        return it->second;
    };

    State start = intern(t.initial(), a.initial());
    for (State id = 0; id < static_cast<State>(order.size()); ++id) {
        auto [qt, qa] = order[static_cast<std::size_t>(id)];
        for (const auto& arc : t.arcs_from(qt)) {
            const Symbol matched = match_input ? arc.in : arc.out;
            const Symbol emitted = match_input ? arc.out : arc.in;
            a.for_each_successor(qa, matched, [&](State qa2) {
                State target = intern(arc.dst, qa2);
                trans.push_back({id, emitted, target});
            });
        }
    }
    std::vector<State> finals;
    for (State id = 0; id < static_cast<State>(order.size()); ++id) {
        auto [qt, qa] = order[static_cast<std::size_t>(id)];
        if (t.is_final(qt) && a.is_final(qa)) finals.push_back(id);
    }
    return Nfa(t.alphabet(), static_cast<int>(order.size()), start, std::move(trans),
               std::move(finals));
}

} // namespace

Nfa post_image(const Transducer& t, const Nfa& a) { return image_product(t, a, true); }

Nfa pre_image(const Transducer& t, const Nfa& a) { return image_product(t, a, false); }

namespace te {

namespace {

Symbol pack(const Alphabet& alphabet, Symbol in, Symbol out) {
    return in * alphabet.size() + out;
}

} // namespace

re::Expr pair(const Alphabet& alphabet, Symbol in, Symbol out) {
    return re::Expr::sym(pack(alphabet, in, out));
}

re::Expr copy_any(const Alphabet& alphabet, const std::vector<Symbol>& symbols) {
    std::vector<Symbol> packed;
    packed.reserve(symbols.size());
    for (Symbol s : symbols) packed.push_back(pack(alphabet, s, s));
    return re::Expr::any_of(std::move(packed));
}

re::Expr copy_all(const Alphabet& alphabet) {
    std::vector<Symbol> all;
    for (Symbol s = 0; s < alphabet.size(); ++s) all.push_back(s);
    return copy_any(alphabet, all);
}

re::Expr map_any(const Alphabet& alphabet,
                 const std::vector<std::pair<Symbol, Symbol>>& pairs) {
    std::vector<Symbol> packed;
    packed.reserve(pairs.size());
    for (const auto& [in, out] : pairs) packed.push_back(pack(alphabet, in, out));
    return re::Expr::any_of(std::move(packed));
}

Transducer compile(const re::Expr& e, const Alphabet& alphabet) {
    const int sigma = alphabet.size();
    re::RawNfa raw = re::compile_ids(e, sigma * sigma);

    // Trim over the packed letter-pair view before unpacking.
    std::vector<std::string> pair_names;
    pair_names.reserve(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(sigma));
    for (int k = 0; k < sigma * sigma; ++k) pair_names.push_back("p" + std::to_string(k));
    Nfa packed = trim(Nfa(Alphabet(std::move(pair_names)), raw.num_states, raw.initial,
                          std::move(raw.transitions), std::move(raw.finals)));

    std::vector<TransducerTransition> trans;
    trans.reserve(packed.transition_count());
    for (const Transition& t : packed.transitions())
        trans.push_back({t.src, t.sym / sigma, t.sym % sigma, t.dst});
    std::vector<State> finals;
    for (State q = 0; q < packed.num_states(); ++q)
        if (packed.is_final(q)) finals.push_back(q);
    return Transducer(alphabet, packed.num_states(), packed.initial(), std::move(trans),
                      std::move(finals));
}

} // namespace te

} // namespace rsg
