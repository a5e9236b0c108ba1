#pragma once

#include "zxdd/phase.hpp"

#include <complex>
#include <cstdint>
#include <string>

namespace zxdd {

/// Exact scalar of the form sqrt(2)^p * (a + b*w + c*w^2 + d*w^3), w = e^{i pi/4}.
///
/// Every factor produced by circuit construction, rewriting and decomposition
/// lives in this ring, so amplitudes are tracked without floating point. Zero
/// is canonical (all coefficients and the exponent zero).
class Scalar {
public:
    constexpr Scalar() = default; // one

    static Scalar zero();
    static Scalar one();
    /// w^k (an eighth root of unity).
    static Scalar omega_pow(int64_t k);
    static Scalar from_int(int64_t n);
    /// sqrt(2)^p.
    static Scalar sqrt2_pow(int64_t p);
    /// 1 + w^k; the value of a closed spider with phase k pi/4.
    static Scalar one_plus_omega_pow(int64_t k);

    [[nodiscard]] bool is_zero() const { return zero_; }
    [[nodiscard]] int64_t power2() const { return p_; }

    Scalar& operator*=(const Scalar& o);
    Scalar& operator+=(const Scalar& o);
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }

    void mul_sqrt2_pow(int64_t p);
    void mul_omega_pow(int64_t k);
    void mul_int(int64_t n);
    void mul_phase(Phase ph) { mul_omega_pow(ph.k()); }

    [[nodiscard]] bool equals(const Scalar& o) const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }

    [[nodiscard]] std::complex<double> to_complex() const;
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    // coefficients of 1, w, w^2, w^3
    int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 0;
    int64_t p_ = 0; // exponent of sqrt(2)
    bool zero_ = false;
};

} // namespace zxdd
