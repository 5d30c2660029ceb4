#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "herschel/polynomial.hpp"
#include "herschel/rational.hpp"

namespace herschel {

/// Uniform view of the exact coefficient rings usable in a Series.
template <class Ring>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational scale(const Rational& r, const Rational& q) { return Rational(r * q); }
    static bool invertible(const Rational& r) { return r != 0; }
    static Rational inverse(const Rational& r) { return Rational(Rational(1) / r); }
};

template <>
struct RingOps<RationalPolynomial> {
    static RationalPolynomial zero() { return {}; }
    static RationalPolynomial one() { return RationalPolynomial(Rational(1)); }
    static RationalPolynomial from_rational(const Rational& q) { return RationalPolynomial(q); }
    static RationalPolynomial scale(const RationalPolynomial& r, const Rational& q) { return r * q; }
    // Units of Q[x] are the nonzero constants.
    static bool invertible(const RationalPolynomial& r) { return !r.is_zero() && r.degree() == 0; }
    static RationalPolynomial inverse(const RationalPolynomial& r) {
        return RationalPolynomial(Rational(Rational(1) / r.coeff(0)));
    }
};

/// Truncated formal power series: exact coefficients c_0..c_N of one formal
/// variable, N = order.  Products truncate to the smaller operand order.
template <class Ring>
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1, RingOps<Ring>::zero()) {}
    explicit Series(std::vector<Ring> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    std::size_t order() const { return c_.size() - 1; }
    const Ring& operator[](std::size_t k) const { return c_[k]; }
    Ring& operator[](std::size_t k) { return c_[k]; }
    const std::vector<Ring>& coefficients() const { return c_; }

    bool operator==(const Series& o) const { return c_ == o.c_; }

private:
    std::vector<Ring> c_;
};

using RationalSeries = Series<Rational>;
using PolynomialSeries = Series<RationalPolynomial>;

/// Cauchy product truncated to min(order a, order b).
template <class Ring>
Series<Ring> series_mul(const Series<Ring>& a, const Series<Ring>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series<Ring> r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Ring acc = RingOps<Ring>::zero();
        for (std::size_t i = 0; i <= k; ++i) acc = acc + a[i] * b[k - i];
        r[k] = std::move(acc);
    }
    return r;
}

template <class Ring>
Series<Ring> series_add(const Series<Ring>& a, const Series<Ring>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series<Ring> r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] + b[k];
    return r;
}

template <class Ring>
Series<Ring> series_scale(const Series<Ring>& a, const Rational& q) {
    Series<Ring> r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) r[k] = RingOps<Ring>::scale(a[k], q);
    return r;
}

/// Multiplicative inverse to the same order; requires an invertible constant
/// term (nonzero rational, or nonzero constant in Q[x]).
template <class Ring>
Series<Ring> series_inverse(const Series<Ring>& a) {
    if (!RingOps<Ring>::invertible(a[0])) {
        throw std::domain_error("series_inverse: constant term is not a unit");
    }
    const Ring inv0 = RingOps<Ring>::inverse(a[0]);
    Series<Ring> b(a.order());
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Ring acc = RingOps<Ring>::zero();
        for (std::size_t k = 1; k <= n; ++k) acc = acc + a[k] * b[n - k];
        b[n] = -(inv0 * acc);
    }
    return b;
}

/// ln(1-X) = -X - X^2/2 - X^3/3 - ...
inline RationalSeries series_log_one_minus(std::size_t order) {
    RationalSeries r(order);
    for (std::size_t k = 1; k <= order; ++k) r[k] = make_rational(-1, static_cast<long>(k));
    return r;
}

/// (1-X)^{1-x} expanded in X; the coefficient of X^k is the degree-k
/// polynomial (x-1)x(x+1)...(x-2+k)/k!  (rising factorial of x-1 over k!).
inline PolynomialSeries binomial_series(std::size_t order) {
    PolynomialSeries r(order);
    RationalPolynomial c = RingOps<RationalPolynomial>::one();
    r[0] = c;
    for (std::size_t k = 1; k <= order; ++k) {
        // c_k = c_{k-1} * (x - 1 + (k-1)) / k
        RationalPolynomial lin(std::vector<Rational>{make_rational(static_cast<long>(k) - 2), Rational(1)});
        c = (c * lin) * make_rational(1, static_cast<long>(k));
        r[k] = c;
    }
    return r;
}

/// X(t) = 1 - e^{-t} = t - t^2/2! + t^3/3! - ..., coefficients lifted to Ring.
template <class Ring>
Series<Ring> one_minus_exp_series(std::size_t order) {
    Series<Ring> x(order);
    Rational inv_fact(1);
    for (std::size_t m = 1; m <= order; ++m) {
        inv_fact /= static_cast<long>(m);
        x[m] = RingOps<Ring>::from_rational((m % 2 == 1) ? inv_fact : Rational(-inv_fact));
    }
    return x;
}

/// Exact composition sum_j c_j X(t)^j with X = 1 - e^{-t}, truncated to the
/// requested order in t.  Horner over truncated series.
template <class Ring>
Series<Ring> compose_with_one_minus_exp(const Series<Ring>& c, std::size_t order) {
    const Series<Ring> x = one_minus_exp_series<Ring>(order);
    Series<Ring> acc(order);
    acc[0] = c[c.order()];
    for (std::size_t j = c.order(); j-- > 0;) {
        acc = series_mul(acc, x);
        acc[0] = acc[0] + c[j];
    }
    return acc;
}

}  // namespace herschel
