#include "zxdd/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace zxdd {

namespace {

bool all_edges_hadamard(const Diagram& d, V v) {
    for (const auto& [w, t] : d.neighbors(v))
        if (t != EType::Hadamard && d.kind(w) != VKind::Boundary)
            return false;
    return true;
}

} // namespace

void to_graph_like(Diagram& d) {
    for (V v : d.vertices())
        if (d.exists(v) && d.kind(v) == VKind::X)
            d.color_change(v);
    // fuse simply connected same-colour pairs until none remain
    bool again = true;
    while (again) {
        again = false;
        for (auto [u, v, t] : d.edges()) {
            if (t != EType::Simple || !d.exists(u) || !d.exists(v))
                continue;
            if (d.kind(u) == VKind::Z && d.kind(v) == VKind::Z) {
                d.remove_edge(u, v);
                d.merge_vertices(u, v);
                again = true;
            }
        }
    }
}

void fuse_spiders(Diagram& d, V v1, V v2) {
    v1 = d.resolve(v1);
    v2 = d.resolve(v2);
    if (!d.exists(v1) || !d.exists(v2) || !d.is_spider(v1) || !d.is_spider(v2))
        throw std::invalid_argument("fuse_spiders: need two spiders");
    if (d.kind(v1) != d.kind(v2))
        throw std::invalid_argument("fuse_spiders: colour mismatch");
    auto t = d.edge_type(v1, v2);
    if (!t || *t != EType::Simple)
        throw std::invalid_argument("fuse_spiders: need a simple connecting edge");
    d.remove_edge(v1, v2);
    d.merge_vertices(v1, v2);
}

void remove_identity(Diagram& d, V v) {
    if (!d.is_spider(v) || !d.phase(v).is_zero() || d.degree(v) != 2)
        throw std::invalid_argument("remove_identity: not a phase-free degree-2 spider");
    auto it = d.neighbors(v).begin();
    auto [a, t1] = *it;
    auto [b, t2] = *std::next(it);
    d.remove_vertex(v);
    EType t = t1 == t2 ? EType::Simple : EType::Hadamard;
    d.add_edge_smart(a, b, t);
}

void local_complement(Diagram& d, V v) {
    if (!d.is_spider(v) || d.kind(v) != VKind::Z || !d.phase(v).is_proper_clifford())
        throw std::invalid_argument("local_complement: need an internal proper-Clifford Z spider");
    if (!d.is_internal(v) || !all_edges_hadamard(d, v))
        throw std::invalid_argument("local_complement: diagram not graph-like at v");
    const int eps = d.phase(v).k() == 2 ? 1 : -1;
    std::vector<V> nbrs;
    for (const auto& [w, t] : d.neighbors(v)) {
        (void)t;
        nbrs.push_back(w);
    }
    const int64_t n = static_cast<int64_t>(nbrs.size());
    d.remove_vertex(v);
    d.scalar().mul_sqrt2_pow((n - 1) * (n - 2) / 2);
    d.scalar().mul_omega_pow(eps);
    for (V w : nbrs)
        d.add_to_phase(w, Phase(-2 * eps));
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            d.add_edge_smart(nbrs[i], nbrs[j], EType::Hadamard);
}

void pivot(Diagram& d, V u, V v) {
    if (!d.is_spider(u) || !d.is_spider(v) || !d.phase(u).is_pauli() || !d.phase(v).is_pauli())
        throw std::invalid_argument("pivot: need two Pauli spiders");
    if (!d.is_internal(u) || !d.is_internal(v))
        throw std::invalid_argument("pivot: spiders must be internal");
    auto t = d.edge_type(u, v);
    if (!t || *t != EType::Hadamard)
        throw std::invalid_argument("pivot: need a connecting Hadamard edge");
    if (!all_edges_hadamard(d, u) || !all_edges_hadamard(d, v))
        throw std::invalid_argument("pivot: diagram not graph-like at the pair");

    const int a = d.phase(u).k() == 4 ? 1 : 0;
    const int b = d.phase(v).k() == 4 ? 1 : 0;

    std::set<V> nu, nv;
    for (const auto& [w, tt] : d.neighbors(u)) {
        (void)tt;
        if (w != v)
            nu.insert(w);
    }
    for (const auto& [w, tt] : d.neighbors(v)) {
        (void)tt;
        if (w != u)
            nv.insert(w);
    }
    std::vector<V> A, B, C;
    for (V w : nu)
        (nv.count(w) ? C : A).push_back(w);
    for (V w : nv)
        if (!nu.count(w))
            B.push_back(w);

    const int64_t x = static_cast<int64_t>(A.size());
    const int64_t y = static_cast<int64_t>(B.size());
    const int64_t z = static_cast<int64_t>(C.size());

    d.remove_vertex(u);
    d.remove_vertex(v);

    d.scalar().mul_sqrt2_pow((x + z) * (y + z) + 1 - x - y - 2 * z);
    if (a && b)
        d.scalar().mul_omega_pow(4);

    for (V w : A)
        d.add_to_phase(w, Phase(4 * b));
    for (V w : B)
        d.add_to_phase(w, Phase(4 * a));
    for (V w : C)
        d.add_to_phase(w, Phase(4 * (a + b)));

    // couplings between the u-side legs (A and C) and v-side legs (B and C);
    // C x C pairs appear in both orders and each C vertex couples to itself
    std::vector<V> left(A), right(B);
    left.insert(left.end(), C.begin(), C.end());
    right.insert(right.end(), C.begin(), C.end());
    for (V p : left)
        for (V q : right)
            d.add_edge_smart(p, q, EType::Hadamard);
}

namespace {

/// Unfuse v's phase onto a fresh leaf through a phase-free hub; v becomes
/// phase-free with one extra Hadamard edge to the hub.
V unfuse_phase(Diagram& d, V v) {
    V leaf = d.add_vertex(VKind::Z, d.phase(v));
    V hub = d.add_vertex(VKind::Z, Phase(0));
    d.set_phase(v, Phase(0));
    d.add_edge(v, hub, EType::Hadamard);
    d.add_edge(hub, leaf, EType::Hadamard);
    return hub;
}

} // namespace

void pivot_gadget(Diagram& d, V u, V v) {
    if (d.phase(v).is_pauli())
        throw std::invalid_argument("pivot_gadget: v must carry a non-Pauli phase");
    unfuse_phase(d, v);
    pivot(d, u, v);
}

void pivot_boundary(Diagram& d, V u, V v) {
    std::vector<std::pair<V, EType>> bedges;
    for (const auto& [w, t] : d.neighbors(v))
        if (d.kind(w) == VKind::Boundary)
            bedges.emplace_back(w, t);
    if (bedges.empty())
        throw std::invalid_argument("pivot_boundary: v has no boundary edge");
    V n = d.add_vertex(VKind::Z, d.phase(v));
    V hub = d.add_vertex(VKind::Z, Phase(0));
    d.set_phase(v, Phase(0));
    for (auto [w, t] : bedges) {
        d.remove_edge(v, w);
        d.add_edge(n, w, t);
    }
    d.add_edge(v, hub, EType::Hadamard);
    d.add_edge(hub, n, EType::Hadamard);
    pivot(d, u, v);
}

size_t gadget_fuse(Diagram& d) {
    size_t n = 0;
    // normalise pi-phase hubs: flip the leaf sign, absorb e^{i beta}
    bool again = true;
    while (again) {
        again = false;
        for (V h : d.vertices()) {
            if (!d.exists(h) || !d.is_spider(h) || d.phase(h).k() != 4)
                continue;
            V leaf = 0;
            bool found = false;
            for (const auto& [w, t] : d.neighbors(h)) {
                if (t == EType::Hadamard && d.is_spider(w) && d.degree(w) == 1) {
                    leaf = w;
                    found = true;
                    break;
                }
            }
            if (!found)
                continue;
            d.scalar().mul_phase(d.phase(leaf));
            d.set_phase(leaf, -d.phase(leaf));
            d.set_phase(h, Phase(0));
            ++n;
            again = true;
        }
    }

    // fuse gadgets over identical target sets
    again = true;
    while (again) {
        again = false;
        std::map<std::vector<V>, std::pair<V, V>> by_targets; // targets -> (hub, leaf)
        for (V h : d.vertices()) {
            if (!d.exists(h) || !d.is_spider(h) || !d.phase(h).is_zero() || !d.is_internal(h))
                continue;
            if (d.degree(h) < 2 || !all_edges_hadamard(d, h))
                continue;
            V leaf = 0;
            bool found = false;
            std::vector<V> targets;
            for (const auto& [w, t] : d.neighbors(h)) {
                (void)t;
                if (!found && d.degree(w) == 1 && d.is_spider(w)) {
                    leaf = w;
                    found = true;
                } else {
                    targets.push_back(w);
                }
            }
            if (!found || targets.empty())
                continue;
            auto it = by_targets.find(targets);
            if (it == by_targets.end()) {
                by_targets[targets] = {h, leaf};
                continue;
            }
            auto [h0, leaf0] = it->second;
            d.add_to_phase(leaf0, d.phase(leaf));
            d.remove_vertex(leaf);
            d.remove_vertex(h);
            d.scalar().mul_sqrt2_pow(1 - static_cast<int64_t>(targets.size()));
            ++n;
            again = true;
            break;
        }
    }
    return n;
}

size_t cleanup_isolated(Diagram& d) {
    size_t n = 0;
    for (V v : d.vertices()) {
        if (!d.exists(v) || !d.is_spider(v))
            continue;
        if (d.degree(v) == 0) {
            d.scalar() *= Scalar::one_plus_omega_pow(d.phase(v).k());
            d.remove_vertex(v);
            ++n;
            continue;
        }
        if (d.degree(v) == 1) {
            auto [w, t] = *d.neighbors(v).begin();
            if (!d.is_spider(w) || d.degree(w) != 1)
                continue;
            // isolated pair: evaluate in the Z/Z picture
            Diagram pairc;
            V a = pairc.add_vertex(VKind::Z, Phase(0));
            V b = pairc.add_vertex(VKind::Z, Phase(0));
            (void)a;
            (void)b;
            EType et = t;
            Phase pv = d.phase(v), pw = d.phase(w);
            if (d.kind(v) == VKind::X)
                et = flip(et);
            if (d.kind(w) == VKind::X)
                et = flip(et);
            Scalar val;
            if (et == EType::Simple) {
                val = Scalar::one_plus_omega_pow(pv.k() + pw.k());
            } else {
                // (1 + w^a + w^b - w^{a+b}) / sqrt2
                val = Scalar::one();
                val += Scalar::omega_pow(pv.k());
                val += Scalar::omega_pow(pw.k());
                Scalar m = Scalar::omega_pow(pv.k() + pw.k());
                m.mul_int(-1);
                val += m;
                val.mul_sqrt2_pow(-1);
            }
            d.scalar() *= val;
            d.remove_vertex(v);
            d.remove_vertex(w);
            ++n;
        }
    }
    return n;
}

namespace {

size_t fuse_pass(Diagram& d) {
    size_t n = 0;
    bool again = true;
    while (again) {
        again = false;
        for (auto [u, v, t] : d.edges()) {
            if (t != EType::Simple || !d.exists(u) || !d.exists(v))
                continue;
            if (d.is_spider(u) && d.is_spider(v) && d.kind(u) == d.kind(v)) {
                d.remove_edge(u, v);
                d.merge_vertices(u, v);
                ++n;
                again = true;
            }
        }
    }
    return n;
}

size_t id_pass(Diagram& d) {
    size_t n = 0;
    bool again = true;
    while (again) {
        again = false;
        for (V v : d.vertices()) {
            if (!d.exists(v) || !d.is_spider(v))
                continue;
            if (d.phase(v).is_zero() && d.degree(v) == 2) {
                // keep proper gadget hubs out of id-removal only when they are
                // not actually removable; a degree-2 hub is removable
                remove_identity(d, v);
                ++n;
                again = true;
            }
        }
    }
    return n;
}

size_t lcomp_pass(Diagram& d) {
    size_t n = 0;
    bool again = true;
    while (again) {
        again = false;
        for (V v : d.vertices()) {
            if (!d.exists(v) || !d.is_spider(v) || d.kind(v) != VKind::Z)
                continue;
            if (!d.phase(v).is_proper_clifford() || !d.is_internal(v) || !all_edges_hadamard(d, v))
                continue;
            local_complement(d, v);
            ++n;
            again = true;
        }
    }
    return n;
}

size_t pivot_pass(Diagram& d) {
    size_t n = 0;
    bool again = true;
    while (again) {
        again = false;
        for (auto [u, v, t] : d.edges()) {
            if (t != EType::Hadamard || !d.exists(u) || !d.exists(v))
                continue;
            if (!d.is_spider(u) || !d.is_spider(v))
                continue;
            if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli())
                continue;
            if (!d.is_internal(u) || !d.is_internal(v))
                continue;
            if (!all_edges_hadamard(d, u) || !all_edges_hadamard(d, v))
                continue;
            pivot(d, u, v);
            ++n;
            again = true;
        }
    }
    return n;
}

size_t pivot_gadget_pass(Diagram& d) {
    size_t n = 0;
    for (auto [u, v, t] : d.edges()) {
        if (t != EType::Hadamard || !d.exists(u) || !d.exists(v))
            continue;
        if (!d.is_spider(u) || !d.is_spider(v))
            continue;
        V pauli = 0, other = 0;
        if (d.phase(u).is_pauli() && !d.phase(v).is_pauli()) {
            pauli = u;
            other = v;
        } else if (d.phase(v).is_pauli() && !d.phase(u).is_pauli()) {
            pauli = v;
            other = u;
        } else {
            continue;
        }
        if (!d.is_internal(pauli) || !d.is_internal(other))
            continue;
        if (d.degree(other) < 2)
            continue; // gadget leaves stay put
        if (!all_edges_hadamard(d, pauli) || !all_edges_hadamard(d, other))
            continue;
        pivot_gadget(d, pauli, other);
        ++n;
    }
    return n;
}

size_t pivot_boundary_pass(Diagram& d) {
    size_t n = 0;
    for (auto [u, v, t] : d.edges()) {
        if (t != EType::Hadamard || !d.exists(u) || !d.exists(v))
            continue;
        if (!d.is_spider(u) || !d.is_spider(v))
            continue;
        V pauli = 0, bnd = 0;
        if (d.phase(u).is_pauli() && d.is_internal(u) && !d.is_internal(v)) {
            pauli = u;
            bnd = v;
        } else if (d.phase(v).is_pauli() && d.is_internal(v) && !d.is_internal(u)) {
            pauli = v;
            bnd = u;
        } else {
            continue;
        }
        if (!all_edges_hadamard(d, pauli))
            continue;
        bool ok = true;
        for (const auto& [w, tt] : d.neighbors(bnd))
            if (d.kind(w) != VKind::Boundary && tt != EType::Hadamard)
                ok = false;
        if (!ok)
            continue;
        pivot_boundary(d, pauli, bnd);
        ++n;
    }
    return n;
}

} // namespace

SimpStats full_simp(Diagram& d) {
    SimpStats s;
    to_graph_like(d);
    const bool closed = d.is_closed();
    bool changed = true;
    size_t guard = 0;
    while (changed) {
        changed = false;
        ++s.outer_iterations;
        if (++guard > 10000)
            throw std::logic_error("full_simp: no fixpoint reached");
        // interior Clifford loop
        bool inner = true;
        while (inner) {
            inner = false;
            size_t k;
            if ((k = fuse_pass(d))) {
                s.fusions += k;
                inner = true;
            }
            if ((k = id_pass(d))) {
                s.ids += k;
                inner = true;
            }
            if ((k = lcomp_pass(d))) {
                s.lcomps += k;
                inner = true;
            }
            if ((k = pivot_pass(d))) {
                s.pivots += k;
                inner = true;
            }
            if (inner)
                changed = true;
        }
        size_t k;
        if ((k = pivot_gadget_pass(d))) {
            s.gadget_pivots += k;
            changed = true;
            continue;
        }
        if (!closed && (k = pivot_boundary_pass(d))) {
            s.boundary_pivots += k;
            changed = true;
            continue;
        }
        if ((k = gadget_fuse(d))) {
            s.gadget_fusions += k;
            changed = true;
            continue;
        }
        if ((k = cleanup_isolated(d))) {
            s.cleanups += k;
            changed = true;
        }
    }
    return s;
}

Scalar clifford_eval(const Diagram& d) {
    if (!d.is_closed())
        throw std::invalid_argument("clifford_eval: diagram has open boundaries");
    if (d.t_count() != 0)
        throw std::invalid_argument("clifford_eval: nonzero T-count");
    Diagram c = d;
    full_simp(c);
    if (c.num_vertices() != 0)
        throw std::logic_error("clifford_eval: residue after simplification");
    return c.scalar();
}

} // namespace zxdd
