#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rsg/dfa.hpp"
#include "rsg/game.hpp"
#include "rsg/membership.hpp"
#include "rsg/trace.hpp"

namespace rsg {

enum class Polarity { ShouldBeIn, ShouldBeOut };

// Which check produced a counterexample. Exact is used by oracle teachers
// that compare against a known target language directly.
enum class CexCause { Initial, Bad, Existential, Universal, Exact };

struct Counterexample {
    Word word;
    Polarity polarity = Polarity::ShouldBeIn;
    CexCause cause = CexCause::Exact;
};

// Learner-facing interface. equivalence() returns nullopt to accept the
// hypothesis. prime() lets teachers batch a table-fill phase's membership
// queries; the default ignores it.
class Teacher {
public:
    virtual ~Teacher() = default;

    virtual const Alphabet& alphabet() const = 0;
    virtual bool membership(const Word& w) = 0;
    virtual std::optional<Counterexample> equivalence(const Dfa& hypothesis) = 0;
    virtual void prime(std::span<const Word> words) { (void)words; }
};

// One recorded equivalence reply, kept for post-run soundness audits.
struct TeacherReply {
    int hypothesis_states = 0;
    Counterexample cex;
    bool hypothesis_accepts = false; // whether the hypothesis accepted cex.word
};

// The strict-but-generous teacher: membership by explicit finite game
// solving, equivalence by the four winning-set checks in order, each resolved
// symbolically. A "yes" therefore guarantees the hypothesis is a winning set,
// even when it differs from the maximal one.
class GameTeacher final : public Teacher {
public:
    GameTeacher(const RegularSafetyGame& game, std::size_t budget = kDefaultBudget,
                TraceSink* trace = nullptr);

    const Alphabet& alphabet() const override { return game_->alphabet; }
    bool membership(const Word& w) override;
    std::optional<Counterexample> equivalence(const Dfa& hypothesis) override;
    void prime(std::span<const Word> words) override { oracle_.prime(words); }

    const MembershipOracle& oracle() const { return oracle_; }
    const RegularSafetyGame& game() const { return *game_; }
    const std::vector<TeacherReply>& replies() const { return replies_; }

    std::size_t membership_queries() const { return membership_queries_; }
    std::size_t equivalence_queries() const { return equivalence_queries_; }

private:
    std::optional<Counterexample> run_checks(const Dfa& hypothesis);

    const RegularSafetyGame* game_;
    MembershipOracle oracle_;
    TraceSink* trace_ = nullptr;
    std::vector<TeacherReply> replies_;
    std::size_t membership_queries_ = 0;
    std::size_t equivalence_queries_ = 0;
};

} // namespace rsg
