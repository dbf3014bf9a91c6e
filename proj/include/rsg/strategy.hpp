#pragma once

#include "rsg/dfa.hpp"
#include "rsg/game.hpp"

namespace rsg {

// The move a verified certificate prescribes at a Player-0 vertex: the
// lexicographically smallest transducer successor inside L(cert). Throws
// ContractError if w is not a Player-0 vertex accepted by the certificate,
// and CertificateError if no successor lies in the certificate (existential
// closedness broken at w).
Word extract_move(const RegularSafetyGame& game, const Dfa& cert, const Word& w);

} // namespace rsg
