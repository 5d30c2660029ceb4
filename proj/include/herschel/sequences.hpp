#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "herschel/polynomial.hpp"
#include "herschel/rational.hpp"
#include "herschel/series.hpp"

namespace herschel {

enum class SequenceFamily { bernoulli, euler_poly, eulerian, carlitz_h, genocchi };

// Provider coefficients c_j = [X^j] phi(1 - X) for each family's phi.

/// t/(e^t - 1): c_0 = 1, c_j = -1/(j(j+1)).
Rational bernoulli_provider_coefficient(std::size_t j);

/// 2 e^{xt}/(e^t + 1): c_j(x) = [X^j] (1-X)^{1-x} / (1 - X/2)
///                            = (1/2^j) sum_{k<=j} (-2)^k C(1-x, k).
PolynomialSeries euler_provider_coefficients(std::size_t order);

/// (1-lambda)/(e^t - lambda): c_0 = 1, c_j = lambda^{j-1}/(lambda-1)^j.
Rational carlitz_provider_coefficient(std::size_t j, const Rational& lambda);

/// 2t/(e^t + 1): c_0 = 0, c_1 = 1,
/// c_j = (1/2^{j-1}) [1 - sum_{k=2..j} 2^{k-1}/((k-1)k)] for j >= 2.
Rational genocchi_provider_coefficient(std::size_t j);

/// Bernoulli number B_n.
Rational bernoulli(std::size_t n);
std::vector<Rational> bernoulli_numbers(std::size_t n_max);

/// Euler polynomial E_n(x).
RationalPolynomial euler_polynomial(std::size_t n);
std::vector<RationalPolynomial> euler_polynomials(std::size_t n_max);

/// Euler number E_n = 2^n E_n(1/2); throws consistency_error if the value
/// fails to be an integer.
BigInt euler_number(std::size_t n);

/// Eulerian polynomial A_n(lambda) = sum_{j=1..n} lambda^j (1-lambda)^{n-j}
/// Delta^j 0^n for n >= 1; A_0 = 1.
RationalPolynomial eulerian_polynomial(std::size_t n);

/// Frobenius form A_n(lambda) = lambda sum_{j=1..n} (lambda-1)^{n-j}
/// Delta^j 0^n, expanded; n >= 1.
RationalPolynomial frobenius_eulerian(std::size_t n);

/// Carlitz H_n(lambda); H_0 = 1, lambda must avoid {0, 1}.
/// Satisfies A_n(lambda) = lambda (lambda-1)^n H_n(lambda).
Rational carlitz_h(std::size_t n, const Rational& lambda);

/// Genocchi number G_n, n >= 1; integrality asserted.
BigInt genocchi(std::size_t n);

/// n! [t^n] of the family's generating function, computed by exact series
/// division alone (no difference table, no transform).  eulerian and
/// carlitz_h both map to (1-lambda)/(e^t - lambda), whose coefficients are
/// the H_n(lambda) values; euler_poly has its own polynomial-valued overload.
std::vector<Rational> egf_oracle(SequenceFamily family, std::size_t n_max,
                                 const std::optional<Rational>& lambda = std::nullopt);
std::vector<RationalPolynomial> egf_euler_polynomials(std::size_t n_max);

}  // namespace herschel
