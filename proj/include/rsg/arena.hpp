#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsg/automaton_ops.hpp"
#include "rsg/game.hpp"

namespace rsg {

enum class Player : std::uint8_t { Zero = 0, One = 1 };

// Explicit finite sub-arena over words of one fixed length. Vertex order is
// deterministic: discovery order for induced arenas (seed first, then level by
// level in lexicographic order), enumeration order for full slices.
struct FiniteArena {
    std::vector<Word> vertices;
    std::vector<Player> owner;
    std::vector<std::vector<std::int32_t>> edges; // adjacency over vertex indices
    std::vector<std::uint8_t> bad;
    std::optional<std::int32_t> initial; // set for induced arenas

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const;
};

// Forward closure of the edge relation from w, restricted to vertices of the
// game. Both variants produce bit-identical arenas; the parallel one expands
// each frontier with OpenMP and merges deterministically.
FiniteArena induced_arena(const RegularSafetyGame& game, const Word& w,
                          std::size_t budget = kDefaultBudget);
FiniteArena induced_arena_serial(const RegularSafetyGame& game, const Word& w,
                                 std::size_t budget = kDefaultBudget);

// The complete slice: every vertex of the given length, reachable or not.
FiniteArena slice_arena(const RegularSafetyGame& game, int length,
                        std::size_t budget = kDefaultBudget);
FiniteArena slice_arena_serial(const RegularSafetyGame& game, int length,
                               std::size_t budget = kDefaultBudget);

// Per-vertex "Player 0 wins" flags: the complement of Player 1's attractor to
// the bad set. Deadlocked Player-0 vertices lose, deadlocked Player-1
// vertices are safe.
std::vector<std::uint8_t> solve_finite(const FiniteArena& arena);

// Reference implementation: sequential worklist with successor counters.
std::vector<std::uint8_t> solve_finite_serial(const FiniteArena& arena);

// OpenMP frontier sweeps over the reverse graph; same fixpoint.
std::vector<std::uint8_t> solve_finite_parallel(const FiniteArena& arena);

} // namespace rsg
