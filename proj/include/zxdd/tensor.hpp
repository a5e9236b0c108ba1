#pragma once

#include "zxdd/diagram.hpp"

#include <complex>
#include <vector>

namespace zxdd {

/// Dense tensor over the open boundary endpoints of a diagram. Legs are
/// ordered inputs-then-outputs; entry index has leg 0 as the most significant
/// bit. A closed diagram yields rank 0 with a single entry.
struct TensorValue {
    std::vector<int> shape; // one 2 per open endpoint
    std::vector<std::complex<double>> entries;

    [[nodiscard]] size_t rank() const { return shape.size(); }
    [[nodiscard]] std::complex<double> scalar_value() const { return entries.at(0); }
    [[nodiscard]] double max_abs_diff(const TensorValue& o) const;
    [[nodiscard]] bool approx_equal(const TensorValue& o, double tol = 1e-10) const;
};

struct TensorLimits {
    size_t max_endpoints = 12;
    size_t max_vertices = 24;
    size_t max_frontier = 22; // log2 of the largest intermediate tensor
};

/// Contract a diagram to its tensor by standard ZX semantics. Test/oracle
/// surface; throws std::invalid_argument when limits are exceeded.
TensorValue to_tensor(const Diagram& d, const TensorLimits& limits = {});

/// Sum of entrywise tensors of several diagrams (shapes must agree).
TensorValue tensor_sum(const std::vector<TensorValue>& parts);

} // namespace zxdd
