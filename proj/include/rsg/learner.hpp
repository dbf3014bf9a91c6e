#pragma once

#include <optional>
#include <vector>

#include "rsg/dfa.hpp"
#include "rsg/observation_table.hpp"
#include "rsg/teacher.hpp"

namespace rsg {

struct LearnOptions {
    int max_rounds = 500; // equivalence-query cap; learning is a semi-algorithm
    ObservationTable::Promotion promotion = ObservationTable::Promotion::First;
    // Re-query a few random stored entries each round and compare: catches
    // teachers whose answers drift. Used by the test harnesses.
    bool paranoid_rechecks = false;
    TraceSink* trace = nullptr; // per-round progress records
};

struct LearningStats {
    std::size_t membership_queries = 0; // issued by the learner itself
    std::size_t equivalence_queries = 0;
    std::vector<int> hypothesis_sizes; // one entry per round, strictly increasing
    int longest_counterexample = 0;
    int max_probes_single_counterexample = 0;
    double fill_seconds = 0;
    double equivalence_seconds = 0;
    double counterexample_seconds = 0;
    double total_seconds = 0;
};

enum class LearnOutcome { Success, RoundLimit };

struct LearnResult {
    LearnOutcome outcome = LearnOutcome::RoundLimit;
    std::optional<Dfa> dfa; // set on success: the accepted hypothesis
    LearningStats stats;
};

// Exact learning loop: fill and close the table, propose the quotient DFA,
// refine with the teacher's counterexample, repeat. On success the returned
// DFA is exactly the hypothesis the teacher accepted.
LearnResult learn(Teacher& teacher, const LearnOptions& options = {});

} // namespace rsg
