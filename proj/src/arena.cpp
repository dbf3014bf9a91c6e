#include "rsg/arena.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsg/errors.hpp"

namespace rsg {

std::size_t FiniteArena::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : edges) n += row.size();
    return n;
}

namespace {

struct VertexInfo {
    bool in_v = false;
    Player owner = Player::Zero;
    bool bad = false;
};

VertexInfo classify(const RegularSafetyGame& game, const Word& w) {
    VertexInfo info;
    if (accepts(game.v0, w)) {
        info.in_v = true;
        info.owner = Player::Zero;
    } else if (accepts(game.v1, w)) {
        info.in_v = true;
        info.owner = Player::One;
    }
    if (info.in_v) info.bad = accepts(game.bad, w);
    return info;
}

// Level-synchronous closure. Successor expansion of one level is data
// parallel; the merge that assigns vertex indices stays sequential so the
// numbering matches the serial explorer exactly.
FiniteArena explore(const RegularSafetyGame& game, const Word& seed, std::size_t budget,
                    bool parallel) {
    (void)parallel;
    FiniteArena arena;
    std::unordered_map<Word, std::int32_t, WordHash> index;

    VertexInfo seed_info = classify(game, seed);
    if (!seed_info.in_v)
        throw InputError("word '" + format_word(game.alphabet, seed) + "' is not a vertex");

    arena.vertices.push_back(seed);
    arena.owner.push_back(seed_info.owner);
    arena.bad.push_back(seed_info.bad ? 1 : 0);
    index.emplace(seed, 0);
    arena.initial = 0;

    std::vector<std::int32_t> level{0};
    while (!level.empty()) {
        const std::size_t level_size = level.size();
        std::vector<std::vector<std::pair<Word, VertexInfo>>> expanded(level_size);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && level_size > 1)
#endif
        for (std::size_t i = 0; i < level_size; ++i) {
            const Word& from = arena.vertices[static_cast<std::size_t>(level[i])];
            for (Word& succ : successors(game.edges, from, budget)) {
                VertexInfo info = classify(game, succ);
                if (!info.in_v) continue; // edges exist only between vertices
                expanded[i].emplace_back(std::move(succ), info);
            }
        }

        std::vector<std::int32_t> next_level;
        for (std::size_t i = 0; i < level_size; ++i) {
            std::vector<std::int32_t>& adj = arena.edges.emplace_back();
            for (auto& [word, info] : expanded[i]) {
                auto [it, inserted] =
                    index.emplace(word, static_cast<std::int32_t>(arena.vertices.size()));
                if (inserted) {
                    if (arena.vertices.size() >= budget)
                        throw BudgetError(budget, "arena exploration");
                    arena.vertices.push_back(std::move(word));
                    arena.owner.push_back(info.owner);
                    arena.bad.push_back(info.bad ? 1 : 0);
                    next_level.push_back(it->second);
                }
                adj.push_back(it->second);
            }
        }
        level = std::move(next_level);
    }
    return arena;
}

FiniteArena slice(const RegularSafetyGame& game, int length, std::size_t budget,
                  bool parallel) {
    (void)parallel;
    FiniteArena arena;
    arena.vertices = enumerate_length(union_of(game.v0, game.v1), length, budget);
    const std::size_t n = arena.vertices.size();
    arena.owner.resize(n);
    arena.bad.resize(n);
    arena.edges.resize(n);

    std::unordered_map<Word, std::int32_t, WordHash> index;
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(arena.vertices[i], static_cast<std::int32_t>(i));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel && n > 1)
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const Word& w = arena.vertices[i];
        // The enumerated set is exactly V's slice, so owners resolve inside it.
        arena.owner[i] = accepts(game.v0, w) ? Player::Zero : Player::One;
        arena.bad[i] = accepts(game.bad, w) ? 1 : 0;
        for (const Word& succ : successors(game.edges, w, budget)) {
            auto it = index.find(succ);
            if (it == index.end()) continue;
            arena.edges[i].push_back(it->second);
        }
    }
    return arena;
}

} // namespace

FiniteArena induced_arena(const RegularSafetyGame& game, const Word& w, std::size_t budget) {
    return explore(game, w, budget, true);
}

FiniteArena induced_arena_serial(const RegularSafetyGame& game, const Word& w,
                                 std::size_t budget) {
    return explore(game, w, budget, false);
}

FiniteArena slice_arena(const RegularSafetyGame& game, int length, std::size_t budget) {
    return slice(game, length, budget, true);
}

FiniteArena slice_arena_serial(const RegularSafetyGame& game, int length, std::size_t budget) {
    return slice(game, length, budget, false);
}

std::vector<std::uint8_t> solve_finite_serial(const FiniteArena& arena) {
    const std::size_t n = arena.size();
    std::vector<std::uint8_t> attracted(n, 0);
    std::vector<std::int32_t> pending(n, 0); // remaining escape moves for Player 0

    std::vector<std::vector<std::int32_t>> reverse(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::int32_t succ : arena.edges[v])
            reverse[static_cast<std::size_t>(succ)].push_back(static_cast<std::int32_t>(v));

    std::vector<std::int32_t> work;
    for (std::size_t v = 0; v < n; ++v) {
        pending[v] = static_cast<std::int32_t>(arena.edges[v].size());
        const bool deadlocked_p0 = arena.owner[v] == Player::Zero && arena.edges[v].empty();
        if (arena.bad[v] || deadlocked_p0) {
            attracted[v] = 1;
            work.push_back(static_cast<std::int32_t>(v));
        }
    }

    while (!work.empty()) {
        std::int32_t v = work.back();
        work.pop_back();
        for (std::int32_t u : reverse[static_cast<std::size_t>(v)]) {
            if (attracted[static_cast<std::size_t>(u)]) continue;
            if (arena.owner[static_cast<std::size_t>(u)] == Player::One ||
                --pending[static_cast<std::size_t>(u)] == 0) {
                attracted[static_cast<std::size_t>(u)] = 1;
                work.push_back(u);
            }
        }
    }

    std::vector<std::uint8_t> winning(n);
    for (std::size_t v = 0; v < n; ++v) winning[v] = attracted[v] ? 0 : 1;
    return winning;
}

std::vector<std::uint8_t> solve_finite_parallel(const FiniteArena& arena) {
    const std::size_t n = arena.size();

    // CSR reverse graph.
    std::vector<std::int32_t> rev_offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::int32_t succ : arena.edges[v]) ++rev_offset[static_cast<std::size_t>(succ) + 1];
    for (std::size_t v = 0; v < n; ++v) rev_offset[v + 1] += rev_offset[v];
    std::vector<std::int32_t> rev_edges(static_cast<std::size_t>(rev_offset[n]));
    {
        std::vector<std::int32_t> cursor(rev_offset.begin(), rev_offset.end() - 1);
        for (std::size_t v = 0; v < n; ++v)
            for (std::int32_t succ : arena.edges[v])
                rev_edges[static_cast<std::size_t>(cursor[static_cast<std::size_t>(succ)]++)] =
                    static_cast<std::int32_t>(v);
    }

    std::vector<std::atomic<std::int32_t>> pending(n);
    std::vector<std::atomic<std::uint8_t>> attracted(n);
    std::vector<std::int32_t> frontier;
    for (std::size_t v = 0; v < n; ++v) {
        pending[v].store(static_cast<std::int32_t>(arena.edges[v].size()),
                         std::memory_order_relaxed);
        const bool deadlocked_p0 = arena.owner[v] == Player::Zero && arena.edges[v].empty();
        const bool base = arena.bad[v] || deadlocked_p0;
        attracted[v].store(base ? 1 : 0, std::memory_order_relaxed);
        if (base) frontier.push_back(static_cast<std::int32_t>(v));
    }

    // Predecessors of each newly attracted vertex are scanned in parallel.
    // Frontier insertion is guarded by the compare-exchange, so each vertex
    // is processed exactly once; stray counter decrements past zero are
    // harmless because the vertex is already attracted then.
    while (!frontier.empty()) {
        std::vector<std::int32_t> next;
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::int32_t> local;
#pragma omp for schedule(dynamic, 128) nowait
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                std::int32_t v = frontier[i];
                for (std::int32_t k = rev_offset[static_cast<std::size_t>(v)];
                     k < rev_offset[static_cast<std::size_t>(v) + 1]; ++k) {
                    std::int32_t u = rev_edges[static_cast<std::size_t>(k)];
                    if (attracted[static_cast<std::size_t>(u)].load(std::memory_order_relaxed))
                        continue;
                    bool take = false;
                    if (arena.owner[static_cast<std::size_t>(u)] == Player::One) {
                        take = true;
                    } else if (pending[static_cast<std::size_t>(u)].fetch_sub(
                                   1, std::memory_order_relaxed) == 1) {
                        take = true;
                    }
                    if (take) {
                        std::uint8_t expected = 0;
                        if (attracted[static_cast<std::size_t>(u)].compare_exchange_strong(
                                expected, 1, std::memory_order_relaxed))
                            local.push_back(u);
                    }
                }
            }
#pragma omp critical
            next.insert(next.end(), local.begin(), local.end());
        }
#else
        for (std::int32_t v : frontier) {
            for (std::int32_t k = rev_offset[static_cast<std::size_t>(v)];
                 k < rev_offset[static_cast<std::size_t>(v) + 1]; ++k) {
                std::int32_t u = rev_edges[static_cast<std::size_t>(k)];
                if (attracted[static_cast<std::size_t>(u)].load()) continue;
                bool take = arena.owner[static_cast<std::size_t>(u)] == Player::One ||
                            pending[static_cast<std::size_t>(u)].fetch_sub(1) == 1;
                if (take) {
                    attracted[static_cast<std::size_t>(u)].store(1);
                    next.push_back(u);
                }
            }
        }
#endif
        frontier = std::move(next);
    }

    std::vector<std::uint8_t> winning(n);
    for (std::size_t v = 0; v < n; ++v)
        winning[v] = attracted[v].load(std::memory_order_relaxed) ? 0 : 1;
    return winning;
}

std::vector<std::uint8_t> solve_finite(const FiniteArena& arena) {
    constexpr std::size_t kParallelThreshold = 8192;
    if (arena.size() >= kParallelThreshold) return solve_finite_parallel(arena);
    return solve_finite_serial(arena);
}

} // namespace rsg
