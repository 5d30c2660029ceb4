#include "herschel/polynomial.hpp"

#include <utility>

namespace herschel {

RationalPolynomial::RationalPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(std::size_t degree, const Rational& coeff) {
    RationalPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = coeff;
    }
    return p;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& at) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * at + coeffs_[k];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& a) const {
    // Horner in (x + a):  p(x+a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...) + c_0
    std::vector<Rational> r;
    r.reserve(coeffs_.size());
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        r.insert(r.begin(), Rational(0));
        for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] += a * r[i + 1];
        r[0] += coeffs_[k];
    }
    return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& q) {
    if (q == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= q;
    return *this;
}

}  // namespace herschel
