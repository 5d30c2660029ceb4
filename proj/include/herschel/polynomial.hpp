#pragma once

#include <cstddef>
#include <vector>

#include "herschel/rational.hpp"

namespace herschel {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree with no trailing zeros.  The zero polynomial has an empty
/// coefficient vector.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(const Rational& constant);
    explicit RationalPolynomial(std::vector<Rational> ascending);

    static RationalPolynomial monomial(std::size_t degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; reported as 0 for the zero polynomial (check is_zero()).
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& at) const;

    /// p(x + a), exact Taylor shift.
    RationalPolynomial shifted(const Rational& a) const;

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& q);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& q) { return a *= q; }
    friend RationalPolynomial operator*(const Rational& q, RationalPolynomial a) { return a *= q; }

    bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace herschel
