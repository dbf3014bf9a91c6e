#pragma once

// Shared helpers for the test suites: brute-force oracles that stay
// independent of the implementation paths they check, plus deterministic
// random instance generators.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rsg/alphabet.hpp"
#include "rsg/arena.hpp"
#include "rsg/automaton_ops.hpp"
#include "rsg/dfa.hpp"
#include "rsg/nfa.hpp"
#include "rsg/teacher.hpp"
#include "rsg/transducer.hpp"

namespace rsg::testing {

// Acceptance by exhaustive run enumeration, no subset construction.
inline bool brute_accepts(const Nfa& a, const Word& w, State q = -1, std::size_t pos = 0) {
    if (q < 0) q = a.initial();
    if (pos == w.size()) return a.is_final(q);
    for (const auto& [sym, dst] : a.transitions_from(q)) {
        if (sym < w[pos]) continue;
        if (sym > w[pos]) break;
        if (brute_accepts(a, w, dst, pos + 1)) return true;
    }
    return false;
}

// Relation membership by exhaustive run enumeration over the pair word.
inline bool brute_relates(const Transducer& t, const Word& u, const Word& v, State q = -1,
                          std::size_t pos = 0) {
    if (u.size() != v.size()) return false;
    if (q < 0) q = t.initial();
    if (pos == u.size()) return t.is_final(q);
    for (const auto& arc : t.arcs_from(q))
        if (arc.in == u[pos] && arc.out == v[pos] && brute_relates(t, u, v, arc.dst, pos + 1))
            return true;
    return false;
}

inline std::vector<Word> all_words_of_length(int sigma, int n) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == sigma - 1) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    if (n == 0) return {Word{}};
    return out;
}

inline std::vector<Word> all_words_up_to(int sigma, int max_len) {
    std::vector<Word> out;
    for (int n = 0; n <= max_len; ++n) {
        auto layer = all_words_of_length(sigma, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

inline Nfa random_nfa(const Alphabet& alphabet, int max_states, std::mt19937& rng) {
    std::uniform_int_distribution<int> state_count(1, max_states);
    const int n = state_count(rng);
    std::uniform_int_distribution<int> state(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<Transition> trans;
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < alphabet.size(); ++s)
            for (State r = 0; r < n; ++r)
                if (coin(rng) < 35) trans.push_back({q, s, r});
    std::vector<State> finals;
    for (State q = 0; q < n; ++q)
        if (coin(rng) < 40) finals.push_back(q);
    return Nfa(alphabet, n, state(rng), std::move(trans), std::move(finals));
}

inline Transducer random_transducer(const Alphabet& alphabet, int max_states,
                                    std::mt19937& rng) {
    std::uniform_int_distribution<int> state_count(1, max_states);
    const int n = state_count(rng);
    std::uniform_int_distribution<int> state(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<TransducerTransition> trans;
    for (State q = 0; q < n; ++q)
        for (Symbol x = 0; x < alphabet.size(); ++x)
            for (Symbol y = 0; y < alphabet.size(); ++y)
                for (State r = 0; r < n; ++r)
                    if (coin(rng) < 25) trans.push_back({q, x, y, r});
    std::vector<State> finals;
    for (State q = 0; q < n; ++q)
        if (coin(rng) < 45) finals.push_back(q);
    return Transducer(alphabet, n, state(rng), std::move(trans), std::move(finals));
}

// Identity transducer over the full alphabet.
inline Transducer identity_transducer(const Alphabet& alphabet) {
    std::vector<TransducerTransition> trans;
    for (Symbol s = 0; s < alphabet.size(); ++s) trans.push_back({0, s, s, 0});
    return Transducer(alphabet, 1, 0, std::move(trans), {0});
}

inline FiniteArena random_arena(int max_vertices, std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, max_vertices);
    const int n = count(rng);
    std::uniform_int_distribution<int> coin(0, 99);
    FiniteArena arena;
    arena.vertices.resize(static_cast<std::size_t>(n)); // placeholder words
    for (int v = 0; v < n; ++v) {
        arena.vertices[static_cast<std::size_t>(v)] = Word{v};
        arena.owner.push_back(coin(rng) < 50 ? Player::Zero : Player::One);
        arena.bad.push_back(coin(rng) < 20 ? 1 : 0);
        arena.edges.emplace_back();
        for (int u = 0; u < n; ++u)
            if (coin(rng) < 25) arena.edges.back().push_back(u);
    }
    return arena;
}

// Depth-bounded game-tree search: can Player 1 force a visit to a bad vertex
// within `depth` moves? Depth = vertex count suffices for the fixpoint.
inline bool minimax_p1_forces_bad(const FiniteArena& arena, std::int32_t v, int depth,
                                  std::map<std::pair<std::int32_t, int>, bool>& memo) {
    if (arena.bad[static_cast<std::size_t>(v)]) return true;
    if (depth == 0) return false;
    auto key = std::make_pair(v, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& succs = arena.edges[static_cast<std::size_t>(v)];
    bool result;
    if (arena.owner[static_cast<std::size_t>(v)] == Player::One) {
        result = false;
        for (std::int32_t u : succs)
            if (minimax_p1_forces_bad(arena, u, depth - 1, memo)) {
                result = true;
                break;
            }
    } else if (succs.empty()) {
        result = true; // deadlocked Player 0 loses
    } else {
        result = true;
        for (std::int32_t u : succs)
            if (!minimax_p1_forces_bad(arena, u, depth - 1, memo)) {
                result = false;
                break;
            }
    }
    memo.emplace(key, result);
    return result;
}

inline std::vector<std::uint8_t> minimax_solve(const FiniteArena& arena) {
    std::map<std::pair<std::int32_t, int>, bool> memo;
    std::vector<std::uint8_t> winning(arena.size());
    for (std::size_t v = 0; v < arena.size(); ++v)
        winning[v] = minimax_p1_forces_bad(arena, static_cast<std::int32_t>(v),
                                           static_cast<int>(arena.size()), memo)
                         ? 0
                         : 1;
    return winning;
}

// Oracle teacher for a known regular target; used by the perfect-teacher
// suites. Counterexamples are shortest, preferring missing words.
class DfaTeacher final : public Teacher {
public:
    explicit DfaTeacher(Dfa target) : target_(std::move(target)) {}

    const Alphabet& alphabet() const override { return target_.alphabet(); }

    bool membership(const Word& w) override {
        ++membership_queries_;
        return accepts(target_, w);
    }

    std::optional<Counterexample> equivalence(const Dfa& hypothesis) override {
        ++equivalence_queries_;
        if (auto missing = shortest_member(difference(target_.as_nfa(), hypothesis)))
            return Counterexample{*missing, Polarity::ShouldBeIn, CexCause::Exact};
        if (auto extra = shortest_member(difference(hypothesis.as_nfa(), target_)))
            return Counterexample{*extra, Polarity::ShouldBeOut, CexCause::Exact};
        return std::nullopt;
    }

    const Dfa& target() const { return target_; }
    std::size_t membership_queries() const { return membership_queries_; }
    std::size_t equivalence_queries() const { return equivalence_queries_; }

private:
    Dfa target_;
    std::size_t membership_queries_ = 0;
    std::size_t equivalence_queries_ = 0;
};

} // namespace rsg::testing
