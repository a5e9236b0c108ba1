#include "zxdd/sv_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace zxdd {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

StateVector::StateVector(uint32_t qubits) : n_(qubits) {
    if (qubits > 12)
        throw std::invalid_argument("statevector oracle limited to 12 qubits");
    amp_.assign(size_t(1) << qubits, 0.0);
    amp_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
    const size_t dim = amp_.size();
    const size_t b0 = size_t(1) << g.q[0];
    const size_t b1 = g.arity > 1 ? size_t(1) << g.q[1] : 0;
    const size_t b2 = g.arity > 2 ? size_t(1) << g.q[2] : 0;
    auto phase_on = [&](auto pred, std::complex<double> ph) {
        for (size_t i = 0; i < dim; ++i)
            if (pred(i))
                amp_[i] *= ph;
    };
    const std::complex<double> w8 = std::polar(1.0, M_PI / 4.0);
    switch (g.kind) {
    case GateKind::H:
        for (size_t i = 0; i < dim; ++i) {
            if (i & b0)
                continue;
            auto a = amp_[i], b = amp_[i | b0];
            amp_[i] = kInvSqrt2 * (a + b);
            amp_[i | b0] = kInvSqrt2 * (a - b);
        }
        break;
    case GateKind::X:
        for (size_t i = 0; i < dim; ++i)
            if (!(i & b0))
                std::swap(amp_[i], amp_[i | b0]);
        break;
    case GateKind::S:
        phase_on([&](size_t i) { return i & b0; }, {0, 1});
        break;
    case GateKind::Sdg:
        phase_on([&](size_t i) { return i & b0; }, {0, -1});
        break;
    case GateKind::T:
        phase_on([&](size_t i) { return i & b0; }, w8);
        break;
    case GateKind::Tdg:
        phase_on([&](size_t i) { return i & b0; }, std::conj(w8));
        break;
    case GateKind::Z:
        phase_on([&](size_t i) { return i & b0; }, -1.0);
        break;
    case GateKind::ZPhase:
        phase_on([&](size_t i) { return i & b0; }, std::polar(1.0, g.k * M_PI / 4.0));
        break;
    case GateKind::CNOT:
        for (size_t i = 0; i < dim; ++i)
            if ((i & b0) && !(i & b1))
                std::swap(amp_[i], amp_[i | b1]);
        break;
    case GateKind::CZ:
        phase_on([&](size_t i) { return (i & b0) && (i & b1); }, -1.0);
        break;
    case GateKind::CZPhase:
        phase_on([&](size_t i) { return (i & b0) && (i & b1); }, std::polar(1.0, g.k * M_PI / 2.0));
        break;
    case GateKind::CCZ:
        phase_on([&](size_t i) { return (i & b0) && (i & b1) && (i & b2); }, -1.0);
        break;
    case GateKind::CSWAP:
        for (size_t i = 0; i < dim; ++i)
            if ((i & b0) && (i & b1) && !(i & b2))
                std::swap(amp_[i], amp_[i ^ b1 ^ b2]);
        break;
    }
}

void StateVector::apply_all(const Circuit& c) {
    for (const auto& g : c.gates)
        apply(g);
}

void StateVector::set_basis(size_t idx) {
    amp_.assign(amp_.size(), 0.0);
    amp_.at(idx) = 1.0;
}

std::complex<double> StateVector::amplitude(const std::vector<uint8_t>& bits) const {
    if (bits.size() != n_)
        throw std::invalid_argument("amplitude: bitstring length mismatch");
    size_t idx = 0;
    for (uint32_t i = 0; i < n_; ++i)
        if (bits[i])
            idx |= size_t(1) << i;
    return amp_[idx];
}

std::complex<double> oracle_amplitude(const Circuit& c, const std::vector<uint8_t>& out_bits) {
    StateVector sv(c.qubits);
    sv.apply_all(c);
    return sv.amplitude(out_bits);
}

std::vector<std::vector<std::complex<double>>> oracle_unitary(const Circuit& c) {
    const size_t dim = size_t(1) << c.qubits;
    std::vector<std::vector<std::complex<double>>> cols(dim);
    for (size_t b = 0; b < dim; ++b) {
        StateVector sv(c.qubits);
        sv.set_basis(b);
        sv.apply_all(c);
        cols[b] = sv.data();
    }
    return cols;
}

} // namespace zxdd
