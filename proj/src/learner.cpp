#include "rsg/learner.hpp"

#include <chrono>
#include <random>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"

namespace rsg {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void recheck_entries(const ObservationTable& table, Teacher& teacher, std::mt19937& rng) {
    const auto& xs = table.access_words();
    const auto& ys = table.suffixes();
    std::uniform_int_distribution<std::size_t> xi(0, xs.size() - 1);
    std::uniform_int_distribution<std::size_t> yi(0, ys.size() - 1);
    for (int k = 0; k < 3; ++k) {
        const Word& x = xs[xi(rng)];
        const Word& y = ys[yi(rng)];
        Word w = x;
        w.insert(w.end(), y.begin(), y.end());
        if (table.entry(x, y) != teacher.membership(w))
            throw ContractError("stored table entry disagrees with a fresh membership query");
    }
}

} // namespace

LearnResult learn(Teacher& teacher, const LearnOptions& options) {
    const auto t_total = std::chrono::steady_clock::now();
    LearnResult result;
    LearningStats& stats = result.stats;

    ObservationTable table(teacher.alphabet(), teacher);
    std::mt19937 recheck_rng(0x5eed);
    std::size_t contract_checks = 0; // one Mem per counterexample, before processing

    for (int round = 1; round <= options.max_rounds; ++round) {
        auto t_fill = std::chrono::steady_clock::now();
        table.close(options.promotion);
        stats.fill_seconds += seconds_since(t_fill);

        if (options.paranoid_rechecks) recheck_entries(table, teacher, recheck_rng);

        ObservationTable::Hypothesis hyp = table.hypothesis();
        if (!stats.hypothesis_sizes.empty() &&
            hyp.dfa.num_states() <= stats.hypothesis_sizes.back())
            throw ContractError("hypothesis sizes must increase strictly across rounds");
        stats.hypothesis_sizes.push_back(hyp.dfa.num_states());

        if (options.trace)
            options.trace->emit({{"event", "round"},
                                 {"round", round},
                                 {"table_rows", table.row_count()},
                                 {"table_columns", table.column_count()},
                                 {"hypothesis_states", hyp.dfa.num_states()}});

        auto t_eq = std::chrono::steady_clock::now();
        auto answer = teacher.equivalence(hyp.dfa);
        ++stats.equivalence_queries;
        stats.equivalence_seconds += seconds_since(t_eq);

        if (!answer) {
            result.outcome = LearnOutcome::Success;
            result.dfa = std::move(hyp.dfa);
            break;
        }

        const Word& cex = answer->word;
        stats.longest_counterexample =
            std::max(stats.longest_counterexample, static_cast<int>(cex.size()));

        auto t_cex = std::chrono::steady_clock::now();
        // Teacher contract: a counterexample separates hypothesis and target.
        bool mem = teacher.membership(cex);
        ++contract_checks;
        if (mem == accepts(hyp.dfa, cex))
            throw ContractError("counterexample does not separate hypothesis and target");
        table.process_counterexample(cex, hyp);
        stats.max_probes_single_counterexample = std::max(
            stats.max_probes_single_counterexample, table.last_counterexample_probes());
        stats.counterexample_seconds += seconds_since(t_cex);
    }

    stats.membership_queries = table.membership_queries() + contract_checks;
    stats.total_seconds = seconds_since(t_total);

    if (result.outcome == LearnOutcome::Success &&
        stats.equivalence_queries > static_cast<std::size_t>(stats.hypothesis_sizes.back()))
        throw ContractError("equivalence queries exceeded the final hypothesis size");
    return result;
}

} // namespace rsg
