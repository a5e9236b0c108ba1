#include "zxdd/diagram.hpp"

#include <algorithm>

namespace zxdd {

Diagram::VertexData& Diagram::data(V v) {
    check(v);
    return verts_[v];
}

const Diagram::VertexData& Diagram::data(V v) const {
    check(v);
    return verts_[v];
}

std::map<V, EType>& Diagram::adj_at(V v) {
    check(v);
    return adj_[v];
}

const std::map<V, EType>& Diagram::adj_at(V v) const {
    check(v);
    return adj_[v];
}

void Diagram::check(V v) const {
    if (v >= verts_.size() || !verts_[v].alive)
        throw std::invalid_argument("dead or unknown vertex handle");
}

V Diagram::add_vertex(VKind kind, Phase phase) {
    V v = static_cast<V>(verts_.size());
    verts_.push_back({kind, phase, true});
    adj_.emplace_back();
    forward_.push_back(v);
    ++live_;
    bump();
    return v;
}

void Diagram::remove_vertex(V v) {
    check(v);
    for (auto& [w, t] : adj_[v]) {
        (void)t;
        adj_[w].erase(v);
    }
    adj_[v].clear();
    verts_[v].alive = false;
    --live_;
    bump();
}

bool Diagram::exists(V v) const { return v < verts_.size() && verts_[v].alive; }

void Diagram::set_phase(V v, Phase p) {
    data(v).phase = p;
    bump();
}

void Diagram::add_to_phase(V v, Phase p) {
    data(v).phase += p;
    bump();
}

void Diagram::set_kind(V v, VKind k) {
    data(v).kind = k;
    bump();
}

std::optional<EType> Diagram::edge_type(V u, V v) const {
    const auto& a = adj_at(u);
    auto it = a.find(v);
    if (it == a.end())
        return std::nullopt;
    return it->second;
}

void Diagram::add_edge(V u, V v, EType t) {
    check(u);
    check(v);
    if (u == v)
        throw std::invalid_argument("add_edge: self-loop");
    if (adj_[u].count(v))
        throw std::invalid_argument("add_edge: parallel edge");
    adj_[u][v] = t;
    adj_[v][u] = t;
    bump();
}

void Diagram::remove_edge(V u, V v) {
    check(u);
    check(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
    bump();
}

void Diagram::resolve_self_loop(V v, EType t) {
    // simple self-loop: drops; Hadamard self-loop: phase += pi, scalar /sqrt2
    if (t == EType::Hadamard) {
        data(v).phase += Phase(4);
        scalar_.mul_sqrt2_pow(-1);
    }
    bump();
}

void Diagram::add_edge_smart(V u, V v, EType t) {
    u = resolve(u);
    v = resolve(v);
    if (u == v) {
        if (kind(u) == VKind::Boundary)
            throw std::invalid_argument("self-loop on boundary");
        resolve_self_loop(u, t);
        return;
    }
    auto existing = edge_type(u, v);
    if (!existing) {
        add_edge(u, v, t);
        return;
    }
    if (!is_spider(u) || !is_spider(v))
        throw std::invalid_argument("parallel edge at boundary");

    if (kind(u) == kind(v)) {
        if (*existing == EType::Simple && t == EType::Simple)
            return; // duplicate wire between same colour is redundant
        if (*existing == EType::Hadamard && t == EType::Hadamard) {
            remove_edge(u, v);
            scalar_.mul_sqrt2_pow(-2); // Hopf pair cancels
            return;
        }
        // one simple + one Hadamard: fuse along the wire, the Hadamard
        // becomes a self-loop on the merged spider
        remove_edge(u, v);
        merge_vertices(u, v);
        resolve_self_loop(resolve(u), EType::Hadamard);
        return;
    }

    // different colours
    if (*existing == EType::Simple && t == EType::Simple) {
        remove_edge(u, v);
        scalar_.mul_sqrt2_pow(-2); // Hopf
        return;
    }
    if (*existing == EType::Hadamard && t == EType::Hadamard)
        return; // H o H = identity wire, redundant copy
    // mixed: change colour of v, which flips both edge types, reducing to the
    // same-colour mixed case
    color_change(v);
    add_edge_smart(u, v, flip(t));
}

void Diagram::merge_vertices(V keep, V absorb) {
    keep = resolve(keep);
    absorb = resolve(absorb);
    if (keep == absorb)
        return;
    if (!is_spider(keep) || !is_spider(absorb) || kind(keep) != kind(absorb))
        throw std::invalid_argument("merge_vertices: incompatible vertices");

    data(keep).phase += data(absorb).phase;

    std::vector<std::pair<V, EType>> pending(adj_[absorb].begin(), adj_[absorb].end());
    remove_vertex(absorb);
    forward_[absorb] = keep;

    for (auto [w, t] : pending) {
        w = resolve(w);
        V k = resolve(keep);
        if (w == k) {
            resolve_self_loop(k, t);
        } else {
            add_edge_smart(k, w, t);
        }
    }
    bump();
}

void Diagram::color_change(V v) {
    check(v);
    if (!is_spider(v))
        throw std::invalid_argument("color_change on boundary");
    verts_[v].kind = verts_[v].kind == VKind::Z ? VKind::X : VKind::Z;
    for (auto& [w, t] : adj_[v]) {
        t = flip(t);
        adj_[w][v] = t;
    }
    bump();
}

V Diagram::resolve(V v) const {
    while (v < forward_.size() && forward_[v] != v)
        v = forward_[v];
    return v;
}

std::vector<V> Diagram::vertices() const {
    std::vector<V> out;
    out.reserve(live_);
    for (V v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive)
            out.push_back(v);
    return out;
}

std::vector<std::tuple<V, V, EType>> Diagram::edges() const {
    std::vector<std::tuple<V, V, EType>> out;
    for (V v = 0; v < verts_.size(); ++v) {
        if (!verts_[v].alive)
            continue;
        for (const auto& [w, t] : adj_[v])
            if (v < w)
                out.emplace_back(v, w, t);
    }
    return out;
}

size_t Diagram::num_spiders() const {
    size_t n = 0;
    for (V v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive && verts_[v].kind != VKind::Boundary)
            ++n;
    return n;
}

size_t Diagram::num_edges() const {
    size_t n = 0;
    for (V v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive)
            n += adj_[v].size();
    return n / 2;
}

int Diagram::t_count() const {
    int n = 0;
    for (V v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive && verts_[v].kind != VKind::Boundary && verts_[v].phase.is_t_like())
            ++n;
    return n;
}

bool Diagram::is_closed() const {
    for (V v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive && verts_[v].kind == VKind::Boundary)
            return false;
    return true;
}

bool Diagram::is_internal(V v) const {
    if (!is_spider(v))
        return false;
    for (const auto& [w, t] : adj_at(v)) {
        (void)t;
        if (kind(w) == VKind::Boundary)
            return false;
    }
    return true;
}

} // namespace zxdd
