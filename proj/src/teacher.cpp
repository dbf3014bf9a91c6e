#include "rsg/teacher.hpp"

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

namespace {

const char* cause_name(CexCause cause) {
    switch (cause) {
        case CexCause::Initial: return "initial";
        case CexCause::Bad: return "bad";
        case CexCause::Existential: return "existential";
        case CexCause::Universal: return "universal";
        case CexCause::Exact: return "exact";
    }
    return "?";
}

} // namespace

GameTeacher::GameTeacher(const RegularSafetyGame& game, std::size_t budget, TraceSink* trace)
    : game_(&game), oracle_(game, budget), trace_(trace) {}

bool GameTeacher::membership(const Word& w) {
    ++membership_queries_;
    bool answer = oracle_.query(w);
    if (trace_)
        trace_->emit({{"event", "membership"},
                      {"word", format_word(game_->alphabet, w)},
                      {"answer", answer},
                      {"membership_queries", membership_queries_}});
    return answer;
}

std::optional<Counterexample> GameTeacher::equivalence(const Dfa& hypothesis) {
    ++equivalence_queries_;
    auto reply = run_checks(hypothesis);
    if (reply) {
        replies_.push_back(
            {hypothesis.num_states(), *reply, accepts(hypothesis, reply->word)});
    }
    if (trace_) {
        nlohmann::json record{{"event", "equivalence"},
                              {"hypothesis_states", hypothesis.num_states()},
                              {"answer", reply ? "no" : "yes"},
                              {"equivalence_queries", equivalence_queries_}};
        if (reply) {
            record["counterexample"] = format_word(game_->alphabet, reply->word);
            record["polarity"] =
                reply->polarity == Polarity::ShouldBeIn ? "should-be-in" : "should-be-out";
            record["cause"] = cause_name(reply->cause);
        }
        trace_->emit(record);
    }
    return reply;
}

std::optional<Counterexample> GameTeacher::run_checks(const Dfa& hypothesis) {
    if (hypothesis.alphabet() != game_->alphabet)
        throw InputError("hypothesis alphabet does not match the game's alphabet");

    Nfa h = hypothesis.as_nfa();

    // Check 1: all initial words must be inside the hypothesis.
    if (auto v = shortest_member(difference(game_->initial, hypothesis)))
        return Counterexample{*v, Polarity::ShouldBeIn, CexCause::Initial};

    // Check 2: no bad word may be inside.
    if (auto v = shortest_member(intersect(h, game_->bad)))
        return Counterexample{*v, Polarity::ShouldBeOut, CexCause::Bad};

    // Check 3: existential closedness. A violating v is a Player-0 vertex in
    // the hypothesis none of whose successors is in the hypothesis. If v is
    // actually winning it must have a winning successor; that successor is a
    // positive counterexample. Otherwise v itself is a negative one.
    Dfa pre_h = determinize(pre_image(game_->edges, h));
    if (auto v = shortest_member(difference(intersect(game_->v0, h), pre_h))) {
        if (oracle_.query(*v)) {
            for (const Word& u : successors(game_->edges, *v, oracle_.budget()))
                if (oracle_.query(u))
                    return Counterexample{u, Polarity::ShouldBeIn, CexCause::Existential};
            throw ContractError("winning Player-0 vertex without winning successor");
        }
        return Counterexample{*v, Polarity::ShouldBeOut, CexCause::Existential};
    }

    // Check 4: universal closedness. A violating v is a Player-1 vertex in
    // the hypothesis with some successor outside. If v is winning, any
    // escaping successor should be inside; otherwise v should be out.
    Nfa escaping = pre_image(game_->edges, complement(hypothesis).as_nfa());
    if (auto v = shortest_member(intersect(intersect(game_->v1, h), escaping))) {
        if (oracle_.query(*v)) {
            for (const Word& u : successors(game_->edges, *v, oracle_.budget()))
                if (!accepts(hypothesis, u))
                    return Counterexample{u, Polarity::ShouldBeIn, CexCause::Universal};
            throw ContractError("universal-closedness witness lost its escaping successor");
        }
        return Counterexample{*v, Polarity::ShouldBeOut, CexCause::Universal};
    }

    return std::nullopt;
}

} // namespace rsg
