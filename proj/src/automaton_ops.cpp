#include "rsg/automaton_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "rsg/errors.hpp"

namespace rsg {

namespace {

void check_symbols(const Nfa& a, const Word& w) {
    for (Symbol s : w)
        if (s < 0 || s >= a.alphabet().size()) throw InputError("symbol outside alphabet");
}

void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (a != b) throw InputError("alphabet mismatch between automata");
}

// Sorted state sets double as canonical subset keys.
using StateSet = std::vector<State>;

StateSet step(const Nfa& a, const StateSet& from, Symbol sym) {
    StateSet out;
    for (State q : from) a.for_each_successor(q, sym, [&](State r) { out.push_back(r); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains_final(const Nfa& a, const StateSet& set) {
    for (State q : set)
        if (a.is_final(q)) return true;
    return false;
}

// Guard against pathological subset blow-ups; the structured automata this
// library manipulates stay far below this.
constexpr std::size_t kSubsetGuard = 4'000'000;

} // namespace

bool accepts(const Nfa& a, const Word& w) {
    check_symbols(a, w);
    StateSet current{a.initial()};
    for (Symbol s : w) {
        current = step(a, current, s);
        if (current.empty()) return false;
    }
    return contains_final(a, current);
}

bool accepts(const Dfa& d, const Word& w) { return d.is_final(d.run(w)); }

Dfa determinize(const Nfa& a) {
    const int sigma = a.alphabet().size();
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    std::vector<State> delta;
    std::vector<bool> finals;

    auto intern = [&](StateSet set) {
        auto [it, inserted] = ids.emplace(std::move(set), static_cast<State>(subsets.size()));
        if (inserted) {
            subsets.push_back(it->first);
            finals.push_back(contains_final(a, it->first));
            delta.resize(subsets.size() * static_cast<std::size_t>(sigma), -1);
            if (subsets.size() > kSubsetGuard)
                throw BudgetError(kSubsetGuard, "subset construction");
        }
        return it->second;
    };

    State start = intern(StateSet{a.initial()});
    for (State q = 0; q < static_cast<State>(subsets.size()); ++q) {
        for (Symbol s = 0; s < sigma; ++s) {
            StateSet next = step(a, subsets[static_cast<std::size_t>(q)], s);
            State target = intern(std::move(next));
            delta[static_cast<std::size_t>(q) * sigma + static_cast<std::size_t>(s)] = target;
        }
    }
    return Dfa(a.alphabet(), static_cast<int>(subsets.size()), start, std::move(delta),
               std::move(finals));
}

Dfa complement(const Dfa& d) {
    std::vector<State> delta;
    delta.reserve(static_cast<std::size_t>(d.num_states()) * d.alphabet().size());
    std::vector<bool> finals(static_cast<std::size_t>(d.num_states()));
    for (State q = 0; q < d.num_states(); ++q) {
        for (Symbol s = 0; s < d.alphabet().size(); ++s) delta.push_back(d.next(q, s));
        finals[static_cast<std::size_t>(q)] = !d.is_final(q);
    }
    return Dfa(d.alphabet(), d.num_states(), d.initial(), std::move(delta), std::move(finals));
}

namespace {

// Reachable product of an NFA with either another NFA or a DFA.
template <typename StepRight, typename FinalRight>
Nfa product(const Nfa& a, State right_initial, StepRight&& step_right, FinalRight&& final_right,
            bool right_in_finals_conjunction) {
    (void)right_in_finals_conjunction;
    std::map<std::pair<State, State>, State> ids;
    std::vector<std::pair<State, State>> order;
    std::vector<Transition> trans;
    std::vector<State> finals;

    auto intern = [&](State qa, State qb) {
        auto [it, inserted] = ids.emplace(std::make_pair(qa, qb),
                                          static_cast<State>(order.size()));
        if (inserted) order.emplace_back(qa, qb);
        return it->second;
    };

    State start = intern(a.initial(), right_initial);
    for (State id = 0; id < static_cast<State>(order.size()); ++id) {
        auto [qa, qb] = order[static_cast<std::size_t>(id)];
        for (const auto& [sym, qa2] : a.transitions_from(qa)) {
            step_right(qb, sym, [&, sym_c = sym, qa2_c = qa2](State qb2) {
                State target = intern(qa2_c, qb2);
                trans.push_back({id, sym_c, target});
            });
        }
    }
    for (State id = 0; id < static_cast<State>(order.size()); ++id) {
        auto [qa, qb] = order[static_cast<std::size_t>(id)];
        if (a.is_final(qa) && final_right(qb)) finals.push_back(id);
    }
    return Nfa(a.alphabet(), static_cast<int>(order.size()), start, std::move(trans),
               std::move(finals));
}

} // namespace

Nfa intersect(const Nfa& a, const Nfa& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    return product(
        a, b.initial(),
        [&](State qb, Symbol sym, auto&& emit) { b.for_each_successor(qb, sym, emit); },
        [&](State qb) { return b.is_final(qb); }, true);
}

Nfa intersect(const Nfa& a, const Dfa& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    return product(
        a, b.initial(),
        [&](State qb, Symbol sym, auto&& emit) { emit(b.next(qb, sym)); },
        [&](State qb) { return b.is_final(qb); }, true);
}

Nfa difference(const Nfa& a, const Dfa& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    return product(
        a, b.initial(),
        [&](State qb, Symbol sym, auto&& emit) { emit(b.next(qb, sym)); },
        [&](State qb) { return !b.is_final(qb); }, true);
}

Nfa union_of(const Nfa& a, const Nfa& b) {
    check_same_alphabet(a.alphabet(), b.alphabet());
    // Disjoint sum plus a fresh initial state that copies both initials'
    // outgoing transitions. No epsilon edges needed.
    const State offset_a = 1;
    const State offset_b = 1 + a.num_states();
    std::vector<Transition> trans;
    for (const Transition& t : a.transitions())
        trans.push_back({t.src + offset_a, t.sym, t.dst + offset_a});
    for (const Transition& t : b.transitions())
        trans.push_back({t.src + offset_b, t.sym, t.dst + offset_b});
    for (const auto& [sym, dst] : a.transitions_from(a.initial()))
        trans.push_back({0, sym, dst + offset_a});
    for (const auto& [sym, dst] : b.transitions_from(b.initial()))
        trans.push_back({0, sym, dst + offset_b});
    std::vector<State> finals;
    if (a.is_final(a.initial()) || b.is_final(b.initial())) finals.push_back(0);
    for (State q : a.final_states()) finals.push_back(q + offset_a);
    for (State q : b.final_states()) finals.push_back(q + offset_b);
    return Nfa(a.alphabet(), 1 + a.num_states() + b.num_states(), 0, std::move(trans),
               std::move(finals));
}

std::optional<Word> shortest_member(const Nfa& a) {
    // BFS over subset states, expanding symbols in alphabet order. Each subset
    // is visited once with its first (shortest, then lexicographically least)
    // path, so the first final subset dequeued yields the canonical witness.
    const int sigma = a.alphabet().size();
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    std::vector<std::pair<State, Symbol>> parent; // (previous subset id, symbol)

    StateSet init{a.initial()};
    ids.emplace(init, 0);
    subsets.push_back(init);
    parent.emplace_back(-1, -1);

    auto reconstruct = [&](State id) {
        Word w;
        while (parent[static_cast<std::size_t>(id)].first >= 0) {
            w.push_back(parent[static_cast<std::size_t>(id)].second);
            id = parent[static_cast<std::size_t>(id)].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (State id = 0; id < static_cast<State>(subsets.size()); ++id) {
        if (contains_final(a, subsets[static_cast<std::size_t>(id)])) return reconstruct(id);
        for (Symbol s = 0; s < sigma; ++s) {
            StateSet next = step(a, subsets[static_cast<std::size_t>(id)], s);
            if (next.empty()) continue;
            auto [it, inserted] = ids.emplace(std::move(next),
                                              static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(it->first);
                parent.emplace_back(id, s);
                if (subsets.size() > kSubsetGuard)
                    throw BudgetError(kSubsetGuard, "shortest-member search");
            }
        }
    }
    return std::nullopt;
}

std::optional<Word> shortest_member(const Dfa& d) { return shortest_member(d.as_nfa()); }

Dfa minimize(const Dfa& d) {
    const int sigma = d.alphabet().size();

    // Restrict to reachable states first.
    std::vector<State> order;
    std::vector<State> index(static_cast<std::size_t>(d.num_states()), -1);
    order.push_back(d.initial());
    index[static_cast<std::size_t>(d.initial())] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol s = 0; s < sigma; ++s) {
            State next = d.next(order[i], s);
            if (index[static_cast<std::size_t>(next)] < 0) {
                index[static_cast<std::size_t>(next)] = static_cast<State>(order.size());
                order.push_back(next);
            }
        }
    }
    const int n = static_cast<int>(order.size());

    // Moore refinement by transition signatures; classes only ever split, so
    // the fixpoint is reached when the class count stops growing.
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = d.is_final(order[i]) ? 1 : 0;

    auto distinct_count = [](const std::vector<int>& v) {
        std::vector<int> copy = v;
        std::sort(copy.begin(), copy.end());
        copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
        return copy.size();
    };

    while (true) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(sigma) + 1);
            sig.push_back(cls[static_cast<std::size_t>(i)]);
            for (Symbol s = 0; s < sigma; ++s) {
                State t = d.next(order[static_cast<std::size_t>(i)], s);
                sig.push_back(cls[static_cast<std::size_t>(index[static_cast<std::size_t>(t)])]);
            }
            auto [it, inserted] = sig_ids.emplace(std::move(sig), -1);
            if (inserted) it->second = static_cast<int>(sig_ids.size()) - 1;
            next_cls[static_cast<std::size_t>(i)] = it->second;
        }
        bool stable = sig_ids.size() == distinct_count(cls);
        cls = std::move(next_cls);
        if (stable) break;
    }

    // Renumber classes in order of first appearance for a canonical result.
    std::vector<int> renumber(static_cast<std::size_t>(n), -1);
    int num_classes = 0;
    std::vector<State> representative;
    for (int i = 0; i < n; ++i) {
        int c = cls[static_cast<std::size_t>(i)];
        if (renumber[static_cast<std::size_t>(c)] < 0) {
            renumber[static_cast<std::size_t>(c)] = num_classes++;
            representative.push_back(order[static_cast<std::size_t>(i)]);
        }
    }

    std::vector<State> delta(static_cast<std::size_t>(num_classes) *
                             static_cast<std::size_t>(sigma));
    std::vector<bool> finals(static_cast<std::size_t>(num_classes));
    for (int c = 0; c < num_classes; ++c) {
        State rep = representative[static_cast<std::size_t>(c)];
        finals[static_cast<std::size_t>(c)] = d.is_final(rep);
        for (Symbol s = 0; s < sigma; ++s) {
            State t = d.next(rep, s);
            int tc = cls[static_cast<std::size_t>(index[static_cast<std::size_t>(t)])];
            delta[static_cast<std::size_t>(c) * sigma + static_cast<std::size_t>(s)] =
                renumber[static_cast<std::size_t>(tc)];
        }
    }
    int initial_class =
        renumber[static_cast<std::size_t>(cls[static_cast<std::size_t>(
            index[static_cast<std::size_t>(d.initial())])])];
    return Dfa(d.alphabet(), num_classes, initial_class, std::move(delta), std::move(finals));
}

std::vector<Word> enumerate_length(const Nfa& a, int n, std::size_t budget) {
    if (n < 0) throw InputError("word length must be nonnegative");
    // alive[i][q]: a final state is reachable from q in exactly n - i steps.
    // Pruning with it makes every explored branch yield at least one word.
    const int states = a.num_states();
    std::vector<std::vector<char>> alive(static_cast<std::size_t>(n) + 1,
                                         std::vector<char>(static_cast<std::size_t>(states), 0));
    for (State q = 0; q < states; ++q)
        alive[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)] = a.is_final(q) ? 1 : 0;
    for (int i = n - 1; i >= 0; --i) {
        for (State q = 0; q < states; ++q) {
            char ok = 0;
            for (const auto& [sym, dst] : a.transitions_from(q)) {
                (void)sym;
                if (alive[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(dst)]) {
                    ok = 1;
                    break;
                }
            }
            alive[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] = ok;
        }
    }

    std::vector<Word> result;
    Word prefix;
    std::vector<StateSet> stack_sets{{a.initial()}};

    auto keep_alive = [&](StateSet& set, int depth) {
        set.erase(std::remove_if(set.begin(), set.end(),
                                 [&](State q) {
                                     return !alive[static_cast<std::size_t>(depth)]
                                                  [static_cast<std::size_t>(q)];
                                 }),
                  set.end());
    };

    keep_alive(stack_sets.back(), 0);
    if (stack_sets.back().empty()) return result;

    // Iterative DFS in symbol order => lexicographic output.
    struct Frame {
        Symbol next_symbol = 0;
    };
    std::vector<Frame> frames{Frame{}};
    const int sigma = a.alphabet().size();
    while (!frames.empty()) {
        int depth = static_cast<int>(frames.size()) - 1;
        if (depth == n) {
            if (result.size() >= budget) throw BudgetError(budget, "length enumeration");
            result.push_back(prefix);
            frames.pop_back();
            stack_sets.pop_back();
            if (!prefix.empty()) prefix.pop_back();
            continue;
        }
        Frame& frame = frames.back();
        bool descended = false;
        while (frame.next_symbol < sigma) {
            Symbol s = frame.next_symbol++;
            StateSet next = step(a, stack_sets.back(), s);
            keep_alive(next, depth + 1);
            if (next.empty()) continue;
            prefix.push_back(s);
            stack_sets.push_back(std::move(next));
            frames.push_back(Frame{});
            descended = true;
            break;
        }
        if (!descended) {
            frames.pop_back();
            stack_sets.pop_back();
            if (!prefix.empty() && depth > 0) prefix.pop_back();
        }
    }
    return result;
}

bool is_empty(const Nfa& a) {
    std::vector<char> seen(static_cast<std::size_t>(a.num_states()), 0);
    std::vector<State> work{a.initial()};
    seen[static_cast<std::size_t>(a.initial())] = 1;
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        if (a.is_final(q)) return false;
        for (const auto& [sym, dst] : a.transitions_from(q)) {
            (void)sym;
            if (!seen[static_cast<std::size_t>(dst)]) {
                seen[static_cast<std::size_t>(dst)] = 1;
                work.push_back(dst);
            }
        }
    }
    return true;
}

bool equivalent(const Nfa& a, const Nfa& b) {
    return is_empty(difference(a, determinize(b))) && is_empty(difference(b, determinize(a)));
}

Nfa trim(const Nfa& a) {
    const int n = a.num_states();
    std::vector<char> reachable(static_cast<std::size_t>(n), 0);
    std::vector<State> work{a.initial()};
    reachable[static_cast<std::size_t>(a.initial())] = 1;
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (const auto& [sym, dst] : a.transitions_from(q)) {
            (void)sym;
            if (!reachable[static_cast<std::size_t>(dst)]) {
                reachable[static_cast<std::size_t>(dst)] = 1;
                work.push_back(dst);
            }
        }
    }

    std::vector<std::vector<State>> rev(static_cast<std::size_t>(n));
    for (const Transition& t : a.transitions()) rev[static_cast<std::size_t>(t.dst)].push_back(t.src);
    std::vector<char> productive(static_cast<std::size_t>(n), 0);
    for (State q = 0; q < n; ++q)
        if (a.is_final(q)) {
            productive[static_cast<std::size_t>(q)] = 1;
            work.push_back(q);
        }
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (State p : rev[static_cast<std::size_t>(q)])
            if (!productive[static_cast<std::size_t>(p)]) {
                productive[static_cast<std::size_t>(p)] = 1;
                work.push_back(p);
            }
    }

    std::vector<State> renumber(static_cast<std::size_t>(n), -1);
    int kept = 0;
    for (State q = 0; q < n; ++q)
        if (reachable[static_cast<std::size_t>(q)] && productive[static_cast<std::size_t>(q)])
            renumber[static_cast<std::size_t>(q)] = kept++;
    if (renumber[static_cast<std::size_t>(a.initial())] < 0) {
        // Empty language: keep a lone initial state.
        return Nfa(a.alphabet(), 1, 0, {}, {});
    }
    std::vector<Transition> trans;
    for (const Transition& t : a.transitions()) {
        State src = renumber[static_cast<std::size_t>(t.src)];
        State dst = renumber[static_cast<std::size_t>(t.dst)];
        if (src >= 0 && dst >= 0) trans.push_back({src, t.sym, dst});
    }
    std::vector<State> finals;
    for (State q = 0; q < n; ++q)
        if (a.is_final(q) && renumber[static_cast<std::size_t>(q)] >= 0)
            finals.push_back(renumber[static_cast<std::size_t>(q)]);
    return Nfa(a.alphabet(), kept, renumber[static_cast<std::size_t>(a.initial())],
               std::move(trans), std::move(finals));
}

} // namespace rsg
