#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rsg/certificate.hpp"
#include "rsg/game.hpp"
#include "rsg/learner.hpp"
#include "rsg/teacher.hpp"

namespace rsg {

enum class RunOutcome { Synthesized, CertificateValid, CertificateInvalid, Aborted };

std::string outcome_name(RunOutcome outcome);

struct RunReport {
    RunOutcome outcome = RunOutcome::Aborted;
    std::string game_name;
    int certificate_states = 0; // minimized count; 0 until a certificate exists
    LearningStats stats;
    double wall_seconds = 0;
    std::optional<WinningSetCertificate> verification;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct SynthesisOptions {
    std::size_t budget = kDefaultBudget;
    int max_rounds = 500;
    TraceSink* trace = nullptr;
    std::string game_name;
};

struct SynthesisResult {
    RunReport report;
    std::optional<Dfa> certificate;
    std::vector<TeacherReply> replies; // every (no, w) the teacher issued
};

// Learn a winning set and independently re-verify it before declaring
// success; a hypothesis the teacher accepted but verification rejects is an
// internal error, not a Synthesized outcome.
SynthesisResult synthesize(const RegularSafetyGame& game, const SynthesisOptions& options = {});

// Standalone verification of a candidate certificate.
RunReport verify_run(const RegularSafetyGame& game, const Dfa& candidate,
                     const std::string& game_name = "");

} // namespace rsg
