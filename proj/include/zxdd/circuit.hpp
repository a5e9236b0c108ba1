#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zxdd {

enum class GateKind : uint8_t { H, S, Sdg, T, Tdg, Z, X, CNOT, CZ, CCZ, CSWAP, ZPhase, CZPhase };

struct Gate {
    GateKind kind;
    std::array<uint32_t, 3> q{0, 0, 0};
    uint8_t arity = 1;
    int k = 0; // ZPhase: phase k*pi/4 (mod 8); CZPhase: phase k*pi/2 (mod 4)

    static Gate g1(GateKind kind, uint32_t a) { return {kind, {a, 0, 0}, 1, 0}; }
    static Gate g2(GateKind kind, uint32_t a, uint32_t b) { return {kind, {a, b, 0}, 2, 0}; }
    static Gate g3(GateKind kind, uint32_t a, uint32_t b, uint32_t c) { return {kind, {a, b, c}, 3, 0}; }
    static Gate zphase(uint32_t a, int k) { return {GateKind::ZPhase, {a, 0, 0}, 1, ((k % 8) + 8) % 8}; }
    static Gate czphase(uint32_t a, uint32_t b, int k) {
        return {GateKind::CZPhase, {a, b, 0}, 2, ((k % 4) + 4) % 4};
    }

    bool operator==(const Gate& o) const = default;
};

struct CircuitMeta {
    std::string klass;
    uint64_t seed = 0;
    std::map<std::string, std::string> params;

    bool operator==(const CircuitMeta& o) const = default;
};

struct Circuit {
    uint32_t qubits = 0;
    std::vector<Gate> gates;
    CircuitMeta meta;

    void push(const Gate& g);
    /// Number of T-like spiders the diagram construction will introduce
    /// before any simplification (T/Tdg: 1, odd ZPhase: 1, odd CZPhase: 3,
    /// CCZ and CSWAP: 7 each).
    [[nodiscard]] int pre_simplification_t_count() const;
};

const char* gate_name(GateKind k);

/// Line-oriented text format: `qubits N`, then one gate per line
/// `NAME q0 [q1 [q2]] [k]`. `#`-prefixed metadata lines round-trip.
std::string serialize(const Circuit& c);
Circuit parse(const std::string& text);

/// Restricted OPENQASM 2.0 ingestion (flagged feature): accepts only the
/// gate alphabet above; anything else is rejected with a line number.
Circuit parse_qasm(const std::string& text);

} // namespace zxdd
