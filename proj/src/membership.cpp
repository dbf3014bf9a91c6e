#include "rsg/membership.hpp"

#include <vector>

#include "rsg/errors.hpp"

namespace rsg {

MembershipOracle::MembershipOracle(const RegularSafetyGame& game, std::size_t budget)
    : game_(&game), budget_(budget) {}

bool MembershipOracle::compute(const Word& w) const {
    if (!is_vertex(*game_, w)) return false;
    FiniteArena arena;
    try {
        arena = induced_arena(*game_, w, budget_);
    } catch (const BudgetError& e) {
        throw BudgetError(e.limit(), "membership query for '" +
                                         format_word(game_->alphabet, w) + "'");
    }
    auto winning = solve_finite(arena);
    // The arena is forward-closed, so the attractor verdict of every explored
    // vertex coincides with its own membership value; cache the whole
    // component, not just the queried word.
    bool result = winning[static_cast<std::size_t>(*arena.initial)] != 0;
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t v = 0; v < arena.size(); ++v)
        memo_.emplace(std::move(arena.vertices[v]), winning[v] != 0);
    return result;
}

bool MembershipOracle::query(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        ++calls_;
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    bool result = compute(w); // fills the memo for the whole component
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(w, result);
    return result;
}

void MembershipOracle::prime(std::span<const Word> words) const {
    std::vector<const Word*> missing;
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const Word& w : words)
            if (!memo_.contains(w)) missing.push_back(&w);
    }
    if (missing.empty()) return;
    std::exception_ptr failure = nullptr;
    // Queries sharing a component resolve through the memo after the first
    // one; distinct components still run in parallel. The inner solvers run
    // serially inside an already-parallel region, so there is no nested
    // parallelism. Exceptions must not escape the omp region.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < missing.size(); ++i) {
        try {
            bool known;
            {
                std::lock_guard<std::mutex> lock(mu_);
                known = memo_.contains(*missing[i]);
            }
            if (!known) {
                bool value = compute(*missing[i]);
                std::lock_guard<std::mutex> lock(mu_);
                memo_.emplace(*missing[i], value);
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::size_t MembershipOracle::resolved_words() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

std::size_t MembershipOracle::call_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return calls_;
}

} // namespace rsg
