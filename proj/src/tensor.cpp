#include "zxdd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

namespace zxdd {

double TensorValue::max_abs_diff(const TensorValue& o) const {
    if (shape != o.shape)
        return HUGE_VAL;
    double m = 0;
    for (size_t i = 0; i < entries.size(); ++i)
        m = std::max(m, std::abs(entries[i] - o.entries[i]));
    return m;
}

bool TensorValue::approx_equal(const TensorValue& o, double tol) const {
    return max_abs_diff(o) <= tol;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Legs of the partial contraction are identified by the edge they run along.
struct LegKey {
    V a, b; // a = processed endpoint, b = pending endpoint (or boundary slot)
    bool operator<(const LegKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

struct Frontier {
    std::vector<LegKey> legs;
    std::vector<std::complex<double>> data{1.0};

    [[nodiscard]] size_t idx(const LegKey& k) const {
        for (size_t i = 0; i < legs.size(); ++i)
            if (!(legs[i] < k) && !(k < legs[i]))
                return i;
        throw std::logic_error("missing leg");
    }
};

} // namespace

TensorValue to_tensor(const Diagram& d, const TensorLimits& limits) {
    std::vector<V> spiders, bounds;
    for (V v : d.vertices())
        (d.kind(v) == VKind::Boundary ? bounds : spiders).push_back(v);

    if (d.num_vertices() > limits.max_vertices)
        throw std::invalid_argument("to_tensor: vertex bound exceeded");

    // endpoints = boundary vertices (each has exactly one leg)
    if (bounds.size() > limits.max_endpoints)
        throw std::invalid_argument("to_tensor: too many open endpoints");

    // ordered boundary list: inputs, outputs, then any stray boundaries
    std::vector<V> ordered;
    std::set<V> seen;
    for (V v : d.inputs())
        if (seen.insert(v).second)
            ordered.push_back(v);
    for (V v : d.outputs())
        if (seen.insert(v).second)
            ordered.push_back(v);
    for (V v : bounds)
        if (seen.insert(v).second)
            ordered.push_back(v);

    // process spiders greedily: most already-processed neighbours first
    std::set<V> done;
    std::vector<V> order;
    std::set<V> remaining(spiders.begin(), spiders.end());
    while (!remaining.empty()) {
        V best = 0;
        int best_score = -1000000;
        for (V v : remaining) {
            int score = 0;
            for (const auto& [w, t] : d.neighbors(v)) {
                (void)t;
                if (done.count(w))
                    score += 2;
                else if (d.kind(w) != VKind::Boundary)
                    score -= 1;
            }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        order.push_back(best);
        remaining.erase(best);
        done.insert(best);
    }

    Frontier f;
    auto grow_check = [&](size_t nlegs) {
        if (nlegs > limits.max_frontier)
            throw std::invalid_argument("to_tensor: contraction frontier too large");
    };

    done.clear();
    auto eff_type = [&](V u, V v, EType t) {
        // fold the colour change of X spiders into the edge: an X endpoint
        // conjugates with one Hadamard
        int h = t == EType::Hadamard ? 1 : 0;
        if (d.kind(u) == VKind::X)
            h ^= 1;
        if (d.kind(v) == VKind::X)
            h ^= 1;
        return h ? EType::Hadamard : EType::Simple;
    };

    auto process_vertex = [&](V v, bool boundary) {
        std::vector<size_t> consume;       // frontier leg positions coupling v
        std::vector<EType> consume_type;   // effective coupling of each
        std::vector<LegKey> fresh;         // legs created by v

        for (const auto& [w, t] : d.neighbors(v)) {
            if (done.count(w)) {
                consume.push_back(f.idx(LegKey{w, v}));
                consume_type.push_back(eff_type(v, w, t));
            } else {
                fresh.push_back(LegKey{v, w});
            }
        }

        size_t old_n = f.legs.size();
        size_t new_n = old_n - consume.size() + fresh.size() + (boundary ? 1 : 0);
        grow_check(new_n);

        // positions kept from the old frontier
        std::vector<size_t> kept;
        for (size_t i = 0; i < old_n; ++i)
            if (std::find(consume.begin(), consume.end(), i) == consume.end())
                kept.push_back(i);

        std::vector<LegKey> new_legs;
        for (size_t i : kept)
            new_legs.push_back(f.legs[i]);
        for (const auto& k : fresh)
            new_legs.push_back(k);
        if (boundary)
            new_legs.push_back(LegKey{v, v}); // the open output slot

        std::vector<std::complex<double>> out(size_t(1) << new_n, 0.0);
        const size_t fresh_n = fresh.size() + (boundary ? 1 : 0);

        const uint8_t pk = boundary ? 0 : d.phase(v).k();
        const std::complex<double> wphase = std::polar(1.0, pk * M_PI / 4.0);

        for (size_t oi = 0; oi < f.data.size(); ++oi) {
            if (f.data[oi] == std::complex<double>(0.0))
                continue;
            // bit i of oi corresponds to leg i (leg 0 most significant)
            auto bit = [&](size_t idx) { return (oi >> (old_n - 1 - idx)) & 1; };
            size_t base = 0;
            for (size_t j = 0; j < kept.size(); ++j)
                base |= bit(kept[j]) << (new_n - 1 - j);

            int vals = boundary ? 2 : 2; // spider/boundary vertex takes value 0/1
            for (int b = 0; b < vals; ++b) {
                std::complex<double> amp = f.data[oi];
                if (!boundary && b == 1)
                    amp *= wphase;
                for (size_t j = 0; j < consume.size(); ++j) {
                    int x = int(bit(consume[j]));
                    if (consume_type[j] == EType::Simple) {
                        if (x != b) {
                            amp = 0;
                            break;
                        }
                    } else {
                        amp *= kInvSqrt2 * ((x & b) ? -1.0 : 1.0);
                    }
                }
                if (amp == std::complex<double>(0.0))
                    continue;
                size_t idx = base;
                for (size_t j = 0; j < fresh_n; ++j)
                    idx |= size_t(b) << (new_n - 1 - (kept.size() + j));
                out[idx] += amp;
            }
        }
        f.legs = std::move(new_legs);
        f.data = std::move(out);
        done.insert(v);
    };

    for (V v : order)
        process_vertex(v, false);
    for (V v : ordered)
        process_vertex(v, true);

    // reorder legs to the canonical boundary order
    size_t n = ordered.size();
    if (f.legs.size() != n)
        throw std::logic_error("to_tensor: dangling legs");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i)
        perm[i] = f.idx(LegKey{ordered[i], ordered[i]});

    TensorValue tv;
    tv.shape.assign(n, 2);
    tv.entries.assign(size_t(1) << n, 0.0);
    std::complex<double> g = d.scalar().to_complex();
    for (size_t src = 0; src < f.data.size(); ++src) {
        size_t dst = 0;
        for (size_t i = 0; i < n; ++i)
            dst |= ((src >> (n - 1 - perm[i])) & 1) << (n - 1 - i);
        tv.entries[dst] += f.data[src] * g;
    }
    return tv;
}

TensorValue tensor_sum(const std::vector<TensorValue>& parts) {
    if (parts.empty())
        throw std::invalid_argument("tensor_sum: empty");
    TensorValue acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].shape != acc.shape)
            throw std::invalid_argument("tensor_sum: shape mismatch");
        for (size_t j = 0; j < acc.entries.size(); ++j)
            acc.entries[j] += parts[i].entries[j];
    }
    return acc;
}

} // namespace zxdd
