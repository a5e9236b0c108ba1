#pragma once

#include "zxdd/phase.hpp"
#include "zxdd/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zxdd {

using V = uint32_t;

enum class VKind : uint8_t { Z, X, Boundary };
enum class EType : uint8_t { Simple, Hadamard };

inline EType flip(EType t) { return t == EType::Simple ? EType::Hadamard : EType::Simple; }

/// Open graph of Z/X spiders with simple/Hadamard edges, ordered boundaries
/// and a tracked global scalar.
///
/// Vertex handles are stable and never reused within one diagram lifetime.
/// Parallel edges and self-loops never persist: add_edge_smart resolves them
/// on insertion, updating phases and the scalar so the tensor semantics of
/// "this diagram plus that edge" is preserved exactly.
class Diagram {
public:
    Diagram() = default;

    V add_vertex(VKind kind, Phase phase = Phase{});
    void remove_vertex(V v);
    [[nodiscard]] bool exists(V v) const;

    [[nodiscard]] VKind kind(V v) const { return data(v).kind; }
    [[nodiscard]] Phase phase(V v) const { return data(v).phase; }
    void set_phase(V v, Phase p);
    void add_to_phase(V v, Phase p);
    void set_kind(V v, VKind k);

    [[nodiscard]] bool is_spider(V v) const { return kind(v) != VKind::Boundary; }

    [[nodiscard]] size_t degree(V v) const { return adj_at(v).size(); }
    [[nodiscard]] const std::map<V, EType>& neighbors(V v) const { return adj_at(v); }
    [[nodiscard]] std::optional<EType> edge_type(V u, V v) const;

    /// Raw insertion; requires that no (u,v) edge exists and u != v.
    void add_edge(V u, V v, EType t);
    /// Insertion with parallel-edge / self-loop resolution. May fuse spiders
    /// (same-colour pairs that end up joined by both a simple and a Hadamard
    /// edge collapse to one spider). Handles follow fusions via resolve().
    void add_edge_smart(V u, V v, EType t);
    void remove_edge(V u, V v);

    /// Identify `absorb` with `keep` (same kind): phases add, edges are
    /// redirected with resolution, connecting edges become (resolved)
    /// self-loops. This is spider fusion when the two are simply connected.
    void merge_vertices(V keep, V absorb);

    /// Toggle Z<->X on a spider, flipping all incident edge types.
    void color_change(V v);

    /// Follow fusion forwarding; handles of absorbed vertices map to their
    /// surviving representative.
    [[nodiscard]] V resolve(V v) const;

    [[nodiscard]] Scalar& scalar() { return scalar_; }
    [[nodiscard]] const Scalar& scalar() const { return scalar_; }

    std::vector<V>& inputs() { return inputs_; }
    std::vector<V>& outputs() { return outputs_; }
    [[nodiscard]] const std::vector<V>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<V>& outputs() const { return outputs_; }

    /// Live vertex handles in ascending order.
    [[nodiscard]] std::vector<V> vertices() const;
    /// Live edges as (u, v, type) with u < v, deterministic order.
    [[nodiscard]] std::vector<std::tuple<V, V, EType>> edges() const;

    [[nodiscard]] size_t num_vertices() const { return live_; }
    [[nodiscard]] size_t num_spiders() const;
    [[nodiscard]] size_t num_edges() const;
    /// Number of spiders with T-like phase.
    [[nodiscard]] int t_count() const;

    [[nodiscard]] bool is_closed() const;
    /// True when v is a spider none of whose neighbours is a boundary.
    [[nodiscard]] bool is_internal(V v) const;

    [[nodiscard]] uint64_t version() const { return version_; }

private:
    struct VertexData {
        VKind kind = VKind::Z;
        Phase phase;
        bool alive = false;
    };

    VertexData& data(V v);
    const VertexData& data(V v) const;
    std::map<V, EType>& adj_at(V v);
    const std::map<V, EType>& adj_at(V v) const;
    void check(V v) const;
    void bump() { ++version_; }
    void resolve_self_loop(V v, EType t);

    std::vector<VertexData> verts_;
    std::vector<std::map<V, EType>> adj_;
    std::vector<V> forward_;
    std::vector<V> inputs_, outputs_;
    Scalar scalar_;
    size_t live_ = 0;
    uint64_t version_ = 0;
};

} // namespace zxdd
