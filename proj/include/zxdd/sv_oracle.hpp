#pragma once

#include "zxdd/circuit.hpp"

#include <complex>
#include <vector>

namespace zxdd {

/// Brute-force dense statevector evolution, independent of the diagram path.
/// Basis index bit i is qubit i's value. Limited to 12 qubits.
class StateVector {
public:
    explicit StateVector(uint32_t qubits);

    void apply(const Gate& g);
    void apply_all(const Circuit& c);
    void set_basis(size_t idx);

    [[nodiscard]] std::complex<double> amplitude(const std::vector<uint8_t>& bits) const;
    [[nodiscard]] const std::vector<std::complex<double>>& data() const { return amp_; }
    [[nodiscard]] uint32_t qubits() const { return n_; }

private:
    uint32_t n_;
    std::vector<std::complex<double>> amp_;
};

/// <out|U|0...0> by dense evolution.
std::complex<double> oracle_amplitude(const Circuit& c, const std::vector<uint8_t>& out_bits);

/// Full unitary of the circuit as a 2^n x 2^n column-major table:
/// column b holds U|b>. For oracle comparisons only (n <= 6 advised).
std::vector<std::vector<std::complex<double>>> oracle_unitary(const Circuit& c);

} // namespace zxdd
