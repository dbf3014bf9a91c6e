#include "rsg/strategy.hpp"

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"

namespace rsg {

Word extract_move(const RegularSafetyGame& game, const Dfa& cert, const Word& w) {
    if (!accepts(game.v0, w))
        throw ContractError("extract_move requires a Player-0 vertex");
    if (!accepts(cert, w))
        throw ContractError("extract_move requires a vertex inside the certificate");
    for (const Word& succ : successors(game.edges, w))
        if (accepts(cert, succ)) return succ; // successors come in lexicographic order
    throw CertificateError("no certificate successor at '" + format_word(game.alphabet, w) +
                           "'");
}

} // namespace rsg
