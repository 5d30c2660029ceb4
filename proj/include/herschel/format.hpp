#pragma once

#include <complex>
#include <string>
#include <vector>

#include "herschel/polynomial.hpp"
#include "herschel/rational.hpp"

namespace herschel {

/// 17-significant-digit shortest form, "-0" normalized to "0".
std::string double_str(double v);

/// "re", "re+imi" or "re-imi"; a real value prints without the imaginary part.
std::string complex_str(std::complex<double> z);

/// "p/q", integers without the "/1".
std::string rational_to_string(const Rational& q);

/// Ascending powers, zero terms skipped, unit coefficients elided:
/// "1/4 - 3/2*x^2 + x^3".  The zero polynomial prints "0".
std::string polynomial_str(const RationalPolynomial& p, const std::string& var = "x");

/// All coefficients 0..degree as strings (CSV/JSON cells).
std::vector<std::string> polynomial_coeff_strings(const RationalPolynomial& p);

/// "p/q" or integer literal; throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

/// "a", "bi", "a+bi", "a-bi" with decimal (possibly exponent-form) parts;
/// a sign directly after 'e'/'E' binds to the exponent, so "1e+2i" is 100i.
std::complex<double> parse_complex(const std::string& text);

}  // namespace herschel
