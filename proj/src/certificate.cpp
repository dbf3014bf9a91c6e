#include "rsg/certificate.hpp"

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

namespace {

ConditionReport from_witness(std::optional<Word> witness) {
    ConditionReport report;
    report.pass = !witness.has_value();
    report.witness = std::move(witness);
    return report;
}

} // namespace

WinningSetCertificate verify_certificate(const RegularSafetyGame& game, const Dfa& candidate) {
    if (candidate.alphabet() != game.alphabet)
        throw InputError("certificate alphabet does not match the game's alphabet");

    Nfa h = candidate.as_nfa();

    // Initial condition: L(I) \ L(H) must be empty.
    ConditionReport initial = from_witness(shortest_member(difference(game.initial, candidate)));

    // Bad condition: L(H) intersected with L(B) must be empty.
    ConditionReport bad = from_witness(shortest_member(intersect(h, game.bad)));

    // Existential closedness: no v in L(V0) n L(H) with all transducer
    // successors outside L(H).
    Dfa pre_h = determinize(pre_image(game.edges, h));
    ConditionReport existential =
        from_witness(shortest_member(difference(intersect(game.v0, h), pre_h)));

    // Universal closedness: no v in L(V1) n L(H) with some successor outside.
    Nfa escaping = pre_image(game.edges, complement(candidate).as_nfa());
    ConditionReport universal =
        from_witness(shortest_member(intersect(intersect(game.v1, h), escaping)));

    WinningSetCertificate result{candidate,
                                 std::move(initial),
                                 std::move(bad),
                                 std::move(existential),
                                 std::move(universal),
                                 candidate.num_states(),
                                 minimize(candidate).num_states()};
    return result;
}

} // namespace rsg
