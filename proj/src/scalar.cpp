#include "zxdd/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace zxdd {

Scalar Scalar::zero() {
    Scalar s;
    s.a_ = 0;
    s.zero_ = true;
    return s;
}

Scalar Scalar::one() { return Scalar{}; }

Scalar Scalar::omega_pow(int64_t k) {
    Scalar s;
    s.mul_omega_pow(k);
    return s;
}

Scalar Scalar::from_int(int64_t n) {
    Scalar s;
    s.mul_int(n);
    return s;
}

Scalar Scalar::sqrt2_pow(int64_t p) {
    Scalar s;
    s.p_ = p;
    return s;
}

Scalar Scalar::one_plus_omega_pow(int64_t k) {
    Scalar s = omega_pow(k);
    s += one();
    return s;
}

void Scalar::mul_sqrt2_pow(int64_t p) {
    if (zero_)
        return;
    p_ += p;
}

void Scalar::mul_omega_pow(int64_t k) {
    if (zero_)
        return;
    k = ((k % 8) + 8) % 8;
    int64_t v[4] = {a_, b_, c_, d_};
    int64_t r[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        int64_t j = i + k;
        // w^4 = -1
        int64_t sign = (j / 4) % 2 == 0 ? 1 : -1;
        r[j % 4] += sign * v[i];
    }
    a_ = r[0];
    b_ = r[1];
    c_ = r[2];
    d_ = r[3];
    normalize();
}

void Scalar::mul_int(int64_t n) {
    if (zero_)
        return;
    a_ *= n;
    b_ *= n;
    c_ *= n;
    d_ *= n;
    normalize();
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (zero_)
        return *this;
    if (o.zero_) {
        *this = zero();
        return *this;
    }
    int64_t x[4] = {a_, b_, c_, d_};
    int64_t y[4] = {o.a_, o.b_, o.c_, o.d_};
    int64_t r[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < 4; ++j) {
            int64_t k = i + j;
            int64_t sign = k >= 4 ? -1 : 1;
            r[k % 4] += sign * x[i] * y[j];
        }
    }
    a_ = r[0];
    b_ = r[1];
    c_ = r[2];
    d_ = r[3];
    p_ += o.p_;
    normalize();
    return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.zero_)
        return *this;
    if (zero_) {
        *this = o;
        return *this;
    }
    Scalar rhs = o;
    // align sqrt(2) exponents at the smaller one; multiplying the coefficient
    // vector by sqrt(2) = w - w^3 lowers the exponent by one:
    //   w*(a,b,c,d) = (-d,a,b,c), w^3*(a,b,c,d) = (-b,-c,-d,a)
    auto mul_coeffs_sqrt2 = [](int64_t& a, int64_t& b, int64_t& c, int64_t& d) {
        int64_t na = -d + b;
        int64_t nb = a + c;
        int64_t nc = b + d;
        int64_t nd = c - a;
        a = na;
        b = nb;
        c = nc;
        d = nd;
    };
    while (p_ > rhs.p_) {
        mul_coeffs_sqrt2(a_, b_, c_, d_);
        p_ -= 1;
    }
    while (rhs.p_ > p_) {
        mul_coeffs_sqrt2(rhs.a_, rhs.b_, rhs.c_, rhs.d_);
        rhs.p_ -= 1;
    }
    a_ += rhs.a_;
    b_ += rhs.b_;
    c_ += rhs.c_;
    d_ += rhs.d_;
    normalize();
    return *this;
}

void Scalar::normalize() {
    if (a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0) {
        *this = zero();
        return;
    }
    zero_ = false;
    // pull factors of 2 into the sqrt(2) exponent to keep coefficients small
    while (a_ % 2 == 0 && b_ % 2 == 0 && c_ % 2 == 0 && d_ % 2 == 0) {
        a_ /= 2;
        b_ /= 2;
        c_ /= 2;
        d_ /= 2;
        p_ += 2;
    }
}

bool Scalar::equals(const Scalar& o) const {
    if (zero_ || o.zero_)
        return zero_ == o.zero_;
    Scalar diff = o;
    diff.mul_int(-1);
    diff += *this;
    return diff.is_zero();
}

std::complex<double> Scalar::to_complex() const {
    if (zero_)
        return {0.0, 0.0};
    const double s = M_SQRT1_2; // cos(pi/4)
    std::complex<double> w(s, s);
    std::complex<double> v = double(a_) + double(b_) * w + double(c_) * std::complex<double>(0, 1) +
                             double(d_) * std::complex<double>(-s, s);
    return v * std::pow(2.0, double(p_) / 2.0);
}

std::string Scalar::to_string() const {
    if (zero_)
        return "0";
    std::ostringstream os;
    os << "rt2^" << p_ << "*(" << a_ << "," << b_ << "," << c_ << "," << d_ << ")";
    return os.str();
}

} // namespace zxdd
