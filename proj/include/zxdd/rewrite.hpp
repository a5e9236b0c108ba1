#pragma once

#include "zxdd/diagram.hpp"
#include "zxdd/scalar.hpp"

namespace zxdd {

/// Convert to graph-like form: all spiders Z, all spider-spider edges
/// Hadamard, no parallel edges or self-loops. Semantics preserved exactly.
void to_graph_like(Diagram& d);

/// Fuse two same-colour spiders joined by a simple edge (phases add).
void fuse_spiders(Diagram& d, V v1, V v2);

/// Remove a phase-free degree-2 spider, composing its two edge types.
void remove_identity(Diagram& d, V v);

/// Local complementation at an internal proper-Clifford spider of a
/// graph-like diagram; removes v.
void local_complement(Diagram& d, V v);

/// Pivot along a Hadamard edge between two internal Pauli spiders of a
/// graph-like diagram; removes both.
void pivot(Diagram& d, V u, V v);

/// Pivot where v carries a non-Pauli phase: the phase is first unfused onto
/// a fresh gadget so that a plain pivot applies.
void pivot_gadget(Diagram& d, V u, V v);

/// Pivot where v touches the boundary: v's phase and boundary edges are
/// unfused onto a fresh spider first.
void pivot_boundary(Diagram& d, V u, V v);

/// Fuse phase gadgets with identical target sets (phases add); normalises
/// pi-phase hubs. Returns number of rewrites.
size_t gadget_fuse(Diagram& d);

/// Simplification counters for one full_simp run.
struct SimpStats {
    size_t fusions = 0, ids = 0, lcomps = 0, pivots = 0, gadget_pivots = 0, boundary_pivots = 0,
           gadget_fusions = 0, cleanups = 0;
    size_t outer_iterations = 0;
    [[nodiscard]] size_t total() const {
        return fusions + ids + lcomps + pivots + gadget_pivots + boundary_pivots + gadget_fusions +
               cleanups;
    }
};

/// Run the full Clifford simplification pipeline to a fixpoint.
SimpStats full_simp(Diagram& d);

/// Reduce a closed T-count-0 diagram to its exact scalar.
Scalar clifford_eval(const Diagram& d);

/// Evaluate isolated spiders and isolated spider pairs to scalars,
/// removing them. Part of the pipeline; exposed for tests.
size_t cleanup_isolated(Diagram& d);

} // namespace zxdd
