#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <unordered_map>

#include "rsg/arena.hpp"
#include "rsg/game.hpp"

namespace rsg {

// Memoized "does Player 0 win from w?" oracle. Words outside V0 u V1 are
// non-members. Each uncached query solves the induced finite game from w.
// Concurrent use is safe; cache fills are idempotent.
class MembershipOracle {
public:
    explicit MembershipOracle(const RegularSafetyGame& game,
                              std::size_t budget = kDefaultBudget);

    bool query(const Word& w) const;

    // Resolves a batch of words, solving the uncached ones in parallel.
    void prime(std::span<const Word> words) const;

    std::size_t resolved_words() const; // distinct words computed so far
    std::size_t call_count() const;
    std::size_t budget() const { return budget_; }
    const RegularSafetyGame& game() const { return *game_; }

private:
    bool compute(const Word& w) const;

    const RegularSafetyGame* game_;
    std::size_t budget_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, bool, WordHash> memo_;
    mutable std::size_t calls_ = 0;
};

} // namespace rsg
