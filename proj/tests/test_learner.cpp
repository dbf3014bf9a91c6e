#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rsg/game.hpp"
#include "rsg/learner.hpp"
#include "rsg/re.hpp"
#include "rsg/teacher.hpp"
#include "test_support.hpp"

using namespace rsg;
using namespace rsg::testing;

namespace {

Alphabet unary() { return Alphabet({"a"}); }
Alphabet ab() { return Alphabet({"a", "b"}); }

Dfa target_from(const re::Expr& e, const Alphabet& alphabet) {
    return minimize(determinize(re::compile(e, alphabet)));
}

} // namespace

TEST_CASE("the initial table grows when ext rows differ") {
    // Target (aa)*: Mem(eps) = true, Mem(a) = false.
    DfaTeacher teacher(target_from(re::Expr::star(re::Expr::times(re::Expr::sym(0), 2)),
                                   unary()));
    ObservationTable table(teacher.alphabet(), teacher);
    CHECK(table.row_count() == 1);
    CHECK_FALSE(table.closed());
    table.close();
    CHECK(table.row_count() == 2);
    CHECK(table.closed());
}

TEST_CASE("closing an already-closed table changes nothing") {
    DfaTeacher teacher(target_from(re::Expr::star(re::Expr::sym(0)), unary()));
    ObservationTable table(teacher.alphabet(), teacher);
    CHECK(table.closed());
    table.close();
    CHECK(table.row_count() == 1);
}

TEST_CASE("closure is promotion-order independent up to row sets") {
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        Dfa target = minimize(determinize(random_nfa(ab(), 4, rng)));
        DfaTeacher t1(target);
        DfaTeacher t2(target);
        LearnOptions first;
        first.promotion = ObservationTable::Promotion::First;
        LearnOptions last;
        last.promotion = ObservationTable::Promotion::Last;
        auto r1 = learn(t1, first);
        auto r2 = learn(t2, last);
        REQUIRE(r1.outcome == LearnOutcome::Success);
        REQUIRE(r2.outcome == LearnOutcome::Success);
        CHECK(r1.dfa->num_states() == r2.dfa->num_states());
        CHECK(equivalent(r1.dfa->as_nfa(), r2.dfa->as_nfa()));
    }
}

TEST_CASE("one-class tables produce one-state hypotheses") {
    SUBCASE("rejecting") {
        DfaTeacher teacher(target_from(re::Expr::none(), ab()));
        ObservationTable table(teacher.alphabet(), teacher);
        table.close();
        auto hyp = table.hypothesis();
        CHECK(hyp.dfa.num_states() == 1);
        CHECK_FALSE(accepts(hyp.dfa, Word{}));
        CHECK_FALSE(accepts(hyp.dfa, Word{0, 1}));
    }
    SUBCASE("accepting") {
        DfaTeacher teacher(
            target_from(re::Expr::star(re::Expr::any_of({0, 1})), ab()));
        ObservationTable table(teacher.alphabet(), teacher);
        table.close();
        auto hyp = table.hypothesis();
        CHECK(hyp.dfa.num_states() == 1);
        CHECK(accepts(hyp.dfa, Word{}));
        CHECK(accepts(hyp.dfa, Word{1, 1, 0}));
    }
}

TEST_CASE("hypotheses replay the table exactly") {
    std::mt19937 rng(37);
    for (int i = 0; i < 10; ++i) {
        Dfa target = minimize(determinize(random_nfa(ab(), 4, rng)));
        DfaTeacher teacher(target);
        auto result = learn(teacher);
        REQUIRE(result.outcome == LearnOutcome::Success);
        // The accepted hypothesis must agree with the oracle everywhere we
        // can afford to check.
        for (const Word& w : all_words_up_to(2, 6))
            REQUIRE(accepts(*result.dfa, w) == accepts(target, w));
    }
}

TEST_CASE("learning (aa)* with a perfect teacher") {
    DfaTeacher teacher(target_from(re::Expr::star(re::Expr::times(re::Expr::sym(0), 2)),
                                   unary()));
    auto result = learn(teacher);
    REQUIRE(result.outcome == LearnOutcome::Success);
    CHECK(result.dfa->num_states() == 2);
    CHECK(result.stats.equivalence_queries <= 2);
    CHECK(accepts(*result.dfa, Word{}));
    CHECK_FALSE(accepts(*result.dfa, Word{0}));
    CHECK(accepts(*result.dfa, Word{0, 0}));
}

TEST_CASE("learned hypotheses are minimal and reached within the query envelope") {
    std::mt19937 rng(61);
    for (int i = 0; i < 15; ++i) {
        Dfa target = minimize(determinize(random_nfa(ab(), 5, rng)));
        DfaTeacher teacher(target);
        LearnOptions options;
        options.paranoid_rechecks = true;
        auto result = learn(teacher, options);
        REQUIRE(result.outcome == LearnOutcome::Success);

        const auto n = static_cast<std::size_t>(result.dfa->num_states());
        CHECK(result.dfa->num_states() == target.num_states());
        CHECK(result.stats.equivalence_queries <= n);

        // Proposition-style envelope: n(n + n|Sigma|) + n log2 m + 4n.
        const double m = std::max(1, result.stats.longest_counterexample);
        const double sigma = 2.0;
        const double bound =
            static_cast<double>(n) * (n + n * sigma) + n * std::log2(std::max(2.0, m)) + 4.0 * n;
        CHECK(static_cast<double>(result.stats.membership_queries) <= bound);

        // Hypothesis sizes increase strictly (asserted inside learn too).
        for (std::size_t k = 1; k < result.stats.hypothesis_sizes.size(); ++k)
            CHECK(result.stats.hypothesis_sizes[k] > result.stats.hypothesis_sizes[k - 1]);

        // Binary search stays within its probe budget.
        CHECK(result.stats.max_probes_single_counterexample <=
              static_cast<int>(std::ceil(std::log2(std::max(2.0, m)))) + 2);
    }
}

TEST_CASE("a game with empty winning region and empty I is solved in round one") {
    // Every vertex is a deadlocked Player-0 vertex, so the region is empty
    // and the one-state rejecting hypothesis passes all four checks at once.
    std::string text = R"(
alphabet: a b
automaton V0
states: s0 s1
initial: s0
accepting: s1
trans: s0 a s1
automaton V1
states: t0
initial: t0
accepting:
automaton I
states: i0
initial: i0
accepting:
automaton B
states: b0
initial: b0
accepting:
transducer E
states: e0
initial: e0
accepting:
)";
    RegularSafetyGame g = parse_game(text);
    GameTeacher teacher(g);
    auto result = learn(teacher);
    REQUIRE(result.outcome == LearnOutcome::Success);
    CHECK(result.stats.equivalence_queries == 1);
    CHECK(result.dfa->num_states() == 1);
}

TEST_CASE("learning the winning region of the sink game end to end") {
    const char* text = R"(
alphabet: a b
automaton V0
states: s0 s1
initial: s0
accepting: s1
trans: s0 a s1
automaton V1
states: t0 t1
initial: t0
accepting: t1
trans: t0 b t1
automaton I
states: i0 i1
initial: i0
accepting: i1
trans: i0 a i1
automaton B
states: b0 b1
initial: b0
accepting: b1
trans: b0 b b1
transducer E
states: e0 e1
initial: e0
accepting: e1
trans: e0 a/a e1
trans: e0 a/b e1
trans: e0 b/b e1
)";
    RegularSafetyGame g = parse_game(text);
    GameTeacher teacher(g);
    auto result = learn(teacher);
    REQUIRE(result.outcome == LearnOutcome::Success);
    CHECK(accepts(*result.dfa, parse_word(g.alphabet, "a")));
    CHECK_FALSE(accepts(*result.dfa, parse_word(g.alphabet, "b")));
}

TEST_CASE("the round limit aborts with partial statistics") {
    // A target needing 3 states with a cap of one round.
    DfaTeacher teacher(target_from(re::Expr::star(re::Expr::times(re::Expr::sym(0), 3)),
                                   unary()));
    LearnOptions options;
    options.max_rounds = 1;
    auto result = learn(teacher, options);
    CHECK(result.outcome == LearnOutcome::RoundLimit);
    CHECK_FALSE(result.dfa.has_value());
    CHECK(result.stats.equivalence_queries == 1);
    CHECK_FALSE(result.stats.hypothesis_sizes.empty());
}
