#pragma once

#include <optional>

#include "rsg/dfa.hpp"
#include "rsg/game.hpp"

namespace rsg {

struct ConditionReport {
    bool pass = false;
    std::optional<Word> witness; // shortest violating word when failing
};

// Standalone soundness check of a candidate winning set: the four conditions
// (initial containment, bad exclusion, existential closedness, universal
// closedness), each resolved symbolically, with no membership queries and no
// counterexample refinement.
struct WinningSetCertificate {
    Dfa dfa;
    ConditionReport initial;
    ConditionReport bad;
    ConditionReport existential;
    ConditionReport universal;
    int state_count = 0;
    int minimized_state_count = 0;

    bool all_pass() const {
        return initial.pass && bad.pass && existential.pass && universal.pass;
    }
};

WinningSetCertificate verify_certificate(const RegularSafetyGame& game, const Dfa& candidate);

} // namespace rsg
