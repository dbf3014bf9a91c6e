#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rsg/benchmarks.hpp"
#include "rsg/dot.hpp"
#include "rsg/membership.hpp"
#include "rsg/run.hpp"
#include "test_support.hpp"

using namespace rsg;
using namespace rsg::testing;

namespace {

nlohmann::json strip_timing(nlohmann::json j) {
    j.erase("wall_seconds");
    return j;
}

Dfa flip_state(const Dfa& d, State target) {
    std::vector<State> delta;
    std::vector<bool> finals(static_cast<std::size_t>(d.num_states()));
    for (State q = 0; q < d.num_states(); ++q) {
        for (Symbol a = 0; a < d.alphabet().size(); ++a) delta.push_back(d.next(q, a));
        finals[static_cast<std::size_t>(q)] = d.is_final(q) != (q == target);
    }
    return Dfa(d.alphabet(), d.num_states(), d.initial(), std::move(delta), std::move(finals));
}

} // namespace

TEST_CASE("synthesis reports are deterministic modulo timing") {
    RegularSafetyGame g = build_benchmark("control-unit");
    SynthesisOptions options;
    options.game_name = "control-unit";
    auto first = synthesize(g, options);
    auto second = synthesize(g, options);
    CHECK(strip_timing(first.report.to_json()) == strip_timing(second.report.to_json()));
    CHECK(equivalent(first.certificate->as_nfa(), second.certificate->as_nfa()));
}

TEST_CASE("certificates round-trip through the file format") {
    RegularSafetyGame g = build_benchmark("resource-allocation");
    auto result = synthesize(g, {});
    REQUIRE(result.report.outcome == RunOutcome::Synthesized);

    std::string text = render_certificate(*result.certificate);
    Dfa reloaded = parse_certificate(text, g.alphabet);
    CHECK(equivalent(reloaded.as_nfa(), result.certificate->as_nfa()));

    RunReport verify = verify_run(g, reloaded, "resource-allocation");
    CHECK(verify.outcome == RunOutcome::CertificateValid);
}

TEST_CASE("flipping an accepting state invalidates the certificate") {
    RegularSafetyGame g = build_benchmark("box");
    auto result = synthesize(g, {});
    REQUIRE(result.report.outcome == RunOutcome::Synthesized);
    Dfa cert = minimize(*result.certificate);

    bool some_flip_invalidates = false;
    for (State q = 0; q < cert.num_states() && !some_flip_invalidates; ++q) {
        RunReport report = verify_run(g, flip_state(cert, q));
        if (report.outcome == RunOutcome::CertificateInvalid) some_flip_invalidates = true;
    }
    CHECK(some_flip_invalidates);
}

TEST_CASE("teacher replies are sound on real runs") {
    for (const char* name : {"box", "nim", "diagonal"}) {
        CAPTURE(name);
        RegularSafetyGame g = build_benchmark(name);
        auto result = synthesize(g, {});
        REQUIRE(result.report.outcome == RunOutcome::Synthesized);

        MembershipOracle oracle(g);
        for (const TeacherReply& reply : result.replies) {
            bool mem = oracle.query(reply.cex.word);
            // Polarity consistency and separation from the hypothesis.
            if (reply.cex.polarity == Polarity::ShouldBeIn) {
                CHECK_FALSE(reply.hypothesis_accepts);
                CHECK(mem);
            } else {
                CHECK(reply.hypothesis_accepts);
                CHECK_FALSE(mem);
            }
            CHECK(mem != reply.hypothesis_accepts);
        }
    }
}

TEST_CASE("query counts stay within the learning envelope") {
    for (const char* name : {"control-unit", "box", "solitary-box"}) {
        CAPTURE(name);
        RegularSafetyGame g = build_benchmark(name);
        auto result = synthesize(g, {});
        REQUIRE(result.report.outcome == RunOutcome::Synthesized);
        const auto& stats = result.report.stats;
        const double n = stats.hypothesis_sizes.back();
        const double sigma = g.alphabet.size();
        const double m = std::max(2, stats.longest_counterexample);
        CHECK(stats.equivalence_queries <= static_cast<std::size_t>(n));
        CHECK(static_cast<double>(stats.membership_queries) <=
              n * (n + n * sigma) + n * std::log2(m) + 4 * n);
    }
}

TEST_CASE("traces are parseable json lines") {
    std::ostringstream sink;
    TraceSink trace(sink);
    RegularSafetyGame g = build_benchmark("control-unit");
    SynthesisOptions options;
    options.trace = &trace;
    synthesize(g, options);

    std::istringstream lines(sink.str());
    std::string line;
    int records = 0;
    int rounds = 0;
    while (std::getline(lines, line)) {
        auto record = nlohmann::json::parse(line);
        REQUIRE(record.contains("event"));
        if (record["event"] == "round") ++rounds;
        ++records;
    }
    CHECK(records > 0);
    CHECK(rounds >= 1);
}

TEST_CASE("dot export mentions every state and doubles accepting circles") {
    RegularSafetyGame g = build_benchmark("control-unit");
    auto result = synthesize(g, {});
    std::string dot = to_dot(*result.certificate, "cert");
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("__start") != std::string::npos);
    for (State q = 0; q < result.certificate->num_states(); ++q)
        CHECK(dot.find("q" + std::to_string(q) + " [shape=") != std::string::npos);

    std::string tdot = to_dot(g.edges, "edges");
    CHECK(tdot.find('/') != std::string::npos); // in/out edge labels
}

TEST_CASE("aborted runs report partial statistics") {
    RegularSafetyGame g = build_benchmark("box");
    SynthesisOptions options;
    options.max_rounds = 1;
    auto result = synthesize(g, options);
    CHECK(result.report.outcome == RunOutcome::Aborted);
    CHECK_FALSE(result.certificate.has_value());
    CHECK(result.report.stats.equivalence_queries == 1);
    CHECK(result.report.to_json()["outcome"] == "Aborted");
}
