#include "rsg/run.hpp"

#include <chrono>
#include <sstream>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"

namespace rsg {

std::string outcome_name(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::Synthesized: return "Synthesized";
        case RunOutcome::CertificateValid: return "CertificateValid";
        case RunOutcome::CertificateInvalid: return "CertificateInvalid";
        case RunOutcome::Aborted: return "Aborted";
    }
    return "?";
}

namespace {

nlohmann::json condition_json(const ConditionReport& report, const Alphabet& alphabet) {
    nlohmann::json out{{"pass", report.pass}};
    if (report.witness) out["witness"] = format_word(alphabet, *report.witness);
    return out;
}

} // namespace

nlohmann::json RunReport::to_json() const {
    nlohmann::json out{
        {"outcome", outcome_name(outcome)},
        {"certificate_states", certificate_states},
        {"wall_seconds", wall_seconds},
        {"membership_queries", stats.membership_queries},
        {"equivalence_queries", stats.equivalence_queries},
        {"rounds", stats.hypothesis_sizes.size()},
        {"hypothesis_sizes", stats.hypothesis_sizes},
        {"longest_counterexample", stats.longest_counterexample},
    };
    if (!game_name.empty()) out["game"] = game_name;
    if (verification) {
        const Alphabet& alphabet = verification->dfa.alphabet();
        out["verification"] = {{"initial", condition_json(verification->initial, alphabet)},
                               {"bad", condition_json(verification->bad, alphabet)},
                               {"existential", condition_json(verification->existential, alphabet)},
                               {"universal", condition_json(verification->universal, alphabet)}};
    }
    return out;
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    if (!game_name.empty()) out << "game:                 " << game_name << '\n';
    out << "outcome:              " << outcome_name(outcome) << '\n';
    if (certificate_states > 0)
        out << "certificate states:   " << certificate_states << " (minimized)\n";
    out << "equivalence queries:  " << stats.equivalence_queries << '\n';
    out << "membership queries:   " << stats.membership_queries << '\n';
    out << "rounds:               " << stats.hypothesis_sizes.size() << '\n';
    out << "longest cex:          " << stats.longest_counterexample << '\n';
    out << "wall seconds:         " << wall_seconds << '\n';
    if (verification) {
        auto line = [&](const char* name, const ConditionReport& report) {
            out << "  " << name << ": " << (report.pass ? "pass" : "FAIL");
            if (report.witness)
                out << "  (witness: '"
                    << format_word(verification->dfa.alphabet(), *report.witness) << "')";
            out << '\n';
        };
        out << "verification:\n";
        line("initial      ", verification->initial);
        line("bad          ", verification->bad);
        line("existential  ", verification->existential);
        line("universal    ", verification->universal);
    }
    return out.str();
}

SynthesisResult synthesize(const RegularSafetyGame& game, const SynthesisOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SynthesisResult result;
    result.report.game_name = options.game_name;

    GameTeacher teacher(game, options.budget, options.trace);
    LearnOptions learn_options;
    learn_options.max_rounds = options.max_rounds;
    learn_options.trace = options.trace;
    LearnResult learned = learn(teacher, learn_options);

    result.report.stats = learned.stats;
    result.replies = teacher.replies();

    if (learned.outcome == LearnOutcome::RoundLimit) {
        result.report.outcome = RunOutcome::Aborted;
    } else {
        // Success never rests on the teacher alone.
        WinningSetCertificate verification = verify_certificate(game, *learned.dfa);
        result.report.certificate_states = verification.minimized_state_count;
        result.report.outcome =
            verification.all_pass() ? RunOutcome::Synthesized : RunOutcome::CertificateInvalid;
        result.report.verification = std::move(verification);
        result.certificate = std::move(learned.dfa);
        if (result.report.outcome != RunOutcome::Synthesized)
            throw ContractError("teacher accepted a hypothesis that fails verification");
    }
    result.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

RunReport verify_run(const RegularSafetyGame& game, const Dfa& candidate,
                     const std::string& game_name) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.game_name = game_name;
    WinningSetCertificate verification = verify_certificate(game, candidate);
    report.certificate_states = verification.minimized_state_count;
    report.outcome = verification.all_pass() ? RunOutcome::CertificateValid
                                             : RunOutcome::CertificateInvalid;
    report.verification = std::move(verification);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace rsg
