#include "zxdd/builder.hpp"

#include <stdexcept>

namespace zxdd {

namespace {

struct Builder {
    Diagram d;
    std::vector<V> cur; // wire frontier per qubit

    explicit Builder(uint32_t qubits) {
        cur.resize(qubits);
        for (uint32_t q = 0; q < qubits; ++q) {
            V in = d.add_vertex(VKind::Boundary);
            d.inputs().push_back(in);
            cur[q] = in;
        }
    }

    V attach(uint32_t q, VKind kind, Phase ph, EType t) {
        V nv = d.add_vertex(kind, ph);
        d.add_edge_smart(cur[q], nv, t);
        cur[q] = nv;
        return nv;
    }

    /// Wire spider usable as a gadget target: a fresh phase carrier in line.
    V wire_spider(uint32_t q, Phase ph) { return attach(q, VKind::Z, ph, EType::Simple); }

    void gadget(const std::vector<V>& targets, Phase leaf_phase) {
        V hub = d.add_vertex(VKind::Z, Phase(0));
        V leaf = d.add_vertex(VKind::Z, leaf_phase);
        d.add_edge_smart(hub, leaf, EType::Hadamard);
        for (V t : targets)
            d.add_edge_smart(hub, t, EType::Hadamard);
        // a k-target gadget carries 2^((1-k)/2); compensate to keep the
        // diagram equal to the diagonal unitary it implements
        d.scalar().mul_sqrt2_pow(static_cast<int64_t>(targets.size()) - 1);
    }

    void ccz(uint32_t a, uint32_t b, uint32_t c) {
        V wa = wire_spider(a, Phase(1));
        V wb = wire_spider(b, Phase(1));
        V wc = wire_spider(c, Phase(1));
        gadget({wa, wb}, Phase(7));
        gadget({wa, wc}, Phase(7));
        gadget({wb, wc}, Phase(7));
        gadget({wa, wb, wc}, Phase(1));
    }

    void cnot(uint32_t c, uint32_t t) {
        V nc = attach(c, VKind::Z, Phase(0), EType::Simple);
        V nt = attach(t, VKind::X, Phase(0), EType::Simple);
        d.add_edge_smart(nc, nt, EType::Simple);
        d.scalar().mul_sqrt2_pow(1);
    }

    void h(uint32_t q) { attach(q, VKind::Z, Phase(0), EType::Hadamard); }

    void apply(const Gate& g) {
        switch (g.kind) {
        case GateKind::H:
            h(g.q[0]);
            break;
        case GateKind::S:
            attach(g.q[0], VKind::Z, Phase(2), EType::Simple);
            break;
        case GateKind::Sdg:
            attach(g.q[0], VKind::Z, Phase(6), EType::Simple);
            break;
        case GateKind::T:
            attach(g.q[0], VKind::Z, Phase(1), EType::Simple);
            break;
        case GateKind::Tdg:
            attach(g.q[0], VKind::Z, Phase(7), EType::Simple);
            break;
        case GateKind::Z:
            attach(g.q[0], VKind::Z, Phase(4), EType::Simple);
            break;
        case GateKind::X:
            attach(g.q[0], VKind::X, Phase(4), EType::Simple);
            break;
        case GateKind::ZPhase:
            attach(g.q[0], VKind::Z, Phase(g.k), EType::Simple);
            break;
        case GateKind::CNOT:
            cnot(g.q[0], g.q[1]);
            break;
        case GateKind::CZ: {
            V na = attach(g.q[0], VKind::Z, Phase(0), EType::Simple);
            V nb = attach(g.q[1], VKind::Z, Phase(0), EType::Simple);
            d.add_edge_smart(na, nb, EType::Hadamard);
            d.scalar().mul_sqrt2_pow(1);
            break;
        }
        case GateKind::CZPhase: {
            if (g.k == 0)
                break;
            if (g.k == 2) {
                apply(Gate::g2(GateKind::CZ, g.q[0], g.q[1]));
                break;
            }
            // odd power: diag(i^{k ab}) = w^{k a} w^{k b} w^{-k (a xor b)}
            V wa = wire_spider(g.q[0], Phase(g.k));
            V wb = wire_spider(g.q[1], Phase(g.k));
            gadget({wa, wb}, Phase(-g.k));
            break;
        }
        case GateKind::CCZ:
            ccz(g.q[0], g.q[1], g.q[2]);
            break;
        case GateKind::CSWAP: {
            // cswap(c; a, b) = cnot(b->a) . (H_b ccz(c,a,b) H_b) . cnot(b->a)
            uint32_t c = g.q[0], a = g.q[1], b = g.q[2];
            cnot(b, a);
            h(b);
            ccz(c, a, b);
            h(b);
            cnot(b, a);
            break;
        }
        }
    }
};

} // namespace

Diagram from_circuit(const Circuit& c) {
    if (c.qubits == 0)
        throw std::invalid_argument("from_circuit: empty register");
    Builder b(c.qubits);
    for (const auto& g : c.gates)
        b.apply(g);
    for (uint32_t q = 0; q < c.qubits; ++q) {
        V out = b.d.add_vertex(VKind::Boundary);
        b.d.outputs().push_back(out);
        b.d.add_edge_smart(b.cur[q], out, EType::Simple);
    }
    return std::move(b.d);
}

Diagram plug_basis(const Diagram& d, const std::vector<uint8_t>& in_bits,
                   const std::vector<uint8_t>& out_bits) {
    if (in_bits.size() != d.inputs().size() || out_bits.size() != d.outputs().size())
        throw std::invalid_argument("plug_basis: bitstring length mismatch");
    Diagram r = d;
    auto plug = [&](V bnd, uint8_t bit) {
        if (r.kind(bnd) != VKind::Boundary)
            throw std::invalid_argument("plug_basis: not a boundary");
        auto nbrs = r.neighbors(bnd);
        if (nbrs.size() != 1)
            throw std::logic_error("boundary degree != 1");
        auto [w, t] = *nbrs.begin();
        r.remove_vertex(bnd);
        V pend = r.add_vertex(VKind::X, Phase(bit ? 4 : 0));
        r.add_edge_smart(pend, w, t);
        r.scalar().mul_sqrt2_pow(-1);
    };
    for (size_t i = 0; i < in_bits.size(); ++i)
        plug(r.inputs()[i], in_bits[i]);
    for (size_t i = 0; i < out_bits.size(); ++i)
        plug(r.outputs()[i], out_bits[i]);
    r.inputs().clear();
    r.outputs().clear();
    return r;
}

} // namespace zxdd
