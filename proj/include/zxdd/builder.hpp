#pragma once

#include "zxdd/circuit.hpp"
#include "zxdd/diagram.hpp"

#include <vector>

namespace zxdd {

/// Standard gate-to-spider construction. The resulting tensor equals the
/// circuit unitary exactly, scalar included: CNOT/CZ contribute sqrt2 each,
/// CCZ expands to the seven-T phase-gadget form with scalar sqrt2^5, CSWAP
/// to CNOT/H-dressed CCZ.
Diagram from_circuit(const Circuit& c);

/// Close the diagram: inputs plugged with |in_bits>, outputs with <out_bits|,
/// as X-spider states normalised so <0|0> = 1 on the identity wire.
Diagram plug_basis(const Diagram& d, const std::vector<uint8_t>& in_bits,
                   const std::vector<uint8_t>& out_bits);

} // namespace zxdd
