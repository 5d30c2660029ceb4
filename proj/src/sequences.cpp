#include "herschel/sequences.hpp"

#include <stdexcept>

#include "herschel/errors.hpp"
#include "herschel/transform.hpp"
#include "herschel/zero_differences.hpp"

namespace herschel {

Rational bernoulli_provider_coefficient(std::size_t j) {
    if (j == 0) return Rational(1);
    // 1/(j+1) - 1/j from (1-X) sum X^k/(k+1)
    auto jj = static_cast<unsigned long>(j);
    return make_rational(BigInt(-1), BigInt(jj) * (jj + 1));
}

PolynomialSeries euler_provider_coefficients(std::size_t order) {
    // 1/(1 - X/2) = sum_k X^k / 2^k
    PolynomialSeries half_geom(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational c = make_rational(BigInt(1), BigInt(1) << static_cast<unsigned long>(k));
        half_geom[k] = RationalPolynomial(c);
    }
    return series_mul(binomial_series(order), half_geom);
}

Rational carlitz_provider_coefficient(std::size_t j, const Rational& lambda) {
    if (lambda == 0 || lambda == 1) {
        throw std::domain_error("carlitz provider: lambda must avoid {0, 1}");
    }
    if (j == 0) return Rational(1);
    // lambda^{j-1} / (lambda-1)^j
    Rational num = rational_pow(lambda, static_cast<unsigned long>(j - 1));
    Rational den = rational_pow(Rational(lambda - 1), static_cast<unsigned long>(j));
    return Rational(num / den);
}

Rational genocchi_provider_coefficient(std::size_t j) {
    if (j == 0) return Rational(0);
    if (j == 1) return Rational(1);
    Rational bracket(1);
    for (std::size_t k = 2; k <= j; ++k) {
        auto kk = static_cast<unsigned long>(k);
        Rational term = make_rational(BigInt(1) << (kk - 1), BigInt(kk) * (kk - 1));
        bracket -= term;
    }
    Rational scale = make_rational(BigInt(1), BigInt(1) << static_cast<unsigned long>(j - 1));
    return Rational(scale * bracket);
}

Rational bernoulli(std::size_t n) {
    return herschel_egf_single<Rational>(bernoulli_provider_coefficient, n);
}

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
    return herschel_egf_numbers<Rational>(bernoulli_provider_coefficient, n_max);
}

RationalPolynomial euler_polynomial(std::size_t n) {
    const PolynomialSeries c = euler_provider_coefficients(n);
    return herschel_egf_single<RationalPolynomial>([&c](std::size_t j) { return c[j]; }, n);
}

std::vector<RationalPolynomial> euler_polynomials(std::size_t n_max) {
    const PolynomialSeries c = euler_provider_coefficients(n_max);
    return herschel_egf_numbers<RationalPolynomial>([&c](std::size_t j) { return c[j]; }, n_max);
}

BigInt euler_number(std::size_t n) {
    Rational v = euler_polynomial(n)(make_rational(1, 2));
    v *= rational_pow(Rational(2), static_cast<unsigned long>(n));
    Rational canon(v);
    canon.canonicalize();
    if (!is_integer(canon)) {
        throw consistency_error("euler_number: 2^n E_n(1/2) is not an integer");
    }
    return canon.get_num();
}

RationalPolynomial eulerian_polynomial(std::size_t n) {
    if (n == 0) return RationalPolynomial(Rational(1));
    auto& table = shared_difference_table();
    table.ensure_rows(n);

    const RationalPolynomial lambda = RationalPolynomial::monomial(1);
    const RationalPolynomial one_minus_lambda =
        RationalPolynomial(std::vector<Rational>{Rational(1), Rational(-1)});

    // Powers of (1 - lambda) up to n-1.
    std::vector<RationalPolynomial> om_pow(n);
    om_pow[0] = RationalPolynomial(Rational(1));
    for (std::size_t k = 1; k < n; ++k) om_pow[k] = om_pow[k - 1] * one_minus_lambda;

    RationalPolynomial acc;
    RationalPolynomial lambda_pow(Rational(1));
    for (std::size_t j = 1; j <= n; ++j) {
        lambda_pow *= lambda;
        acc += lambda_pow * om_pow[n - j] * Rational(table.delta_zero(j, n));
    }
    return acc;
}

RationalPolynomial frobenius_eulerian(std::size_t n) {
    if (n == 0) throw std::domain_error("frobenius_eulerian: n must be >= 1");
    auto& table = shared_difference_table();
    table.ensure_rows(n);

    const RationalPolynomial lambda_minus_one =
        RationalPolynomial(std::vector<Rational>{Rational(-1), Rational(1)});

    std::vector<RationalPolynomial> lm_pow(n);
    lm_pow[0] = RationalPolynomial(Rational(1));
    for (std::size_t k = 1; k < n; ++k) lm_pow[k] = lm_pow[k - 1] * lambda_minus_one;

    RationalPolynomial acc;
    for (std::size_t j = 1; j <= n; ++j) {
        acc += lm_pow[n - j] * Rational(table.delta_zero(j, n));
    }
    return acc * RationalPolynomial::monomial(1);
}

Rational carlitz_h(std::size_t n, const Rational& lambda) {
    if (lambda == 0 || lambda == 1) {
        throw std::domain_error("carlitz_h: lambda must avoid {0, 1}");
    }
    if (n == 0) return Rational(1);
    return herschel_egf_single<Rational>(
        [&lambda](std::size_t j) { return carlitz_provider_coefficient(j, lambda); }, n);
}

BigInt genocchi(std::size_t n) {
    if (n == 0) throw std::domain_error("genocchi: n must be >= 1");
    Rational v = herschel_egf_single<Rational>(genocchi_provider_coefficient, n);
    v.canonicalize();
    if (!is_integer(v)) {
        throw consistency_error("genocchi: transform value is not an integer");
    }
    return v.get_num();
}

namespace {

// Multiply coefficient n by n! in place (series -> EGF number sequence).
template <class T>
void egf_renormalize(std::vector<T>& a) {
    BigInt fact(1);
    for (std::size_t n = 1; n < a.size(); ++n) {
        fact *= static_cast<unsigned long>(n);
        a[n] = a[n] * Rational(fact);
    }
}

std::vector<Rational> to_vector(const RationalSeries& s) {
    std::vector<Rational> out;
    out.reserve(s.order() + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) out.push_back(s[k]);
    return out;
}

}  // namespace

std::vector<Rational> egf_oracle(SequenceFamily family, std::size_t n_max,
                                 const std::optional<Rational>& lambda) {
    switch (family) {
        case SequenceFamily::bernoulli: {
            // t/(e^t - 1) = 1 / sum_{k>=0} t^k/(k+1)!
            RationalSeries den(n_max);
            for (std::size_t k = 0; k <= n_max; ++k) {
                den[k] = make_rational(BigInt(1), factorial(static_cast<unsigned long>(k + 1)));
            }
            auto a = to_vector(series_inverse(den));
            egf_renormalize(a);
            return a;
        }
        case SequenceFamily::genocchi: {
            // 2t/(e^t + 1): invert e^t + 1, scale by 2, shift up one degree.
            RationalSeries den(n_max);
            den[0] = Rational(2);
            for (std::size_t k = 1; k <= n_max; ++k) {
                den[k] = make_rational(BigInt(1), factorial(static_cast<unsigned long>(k)));
            }
            RationalSeries inv = series_inverse(den);
            std::vector<Rational> a(n_max + 1, Rational(0));
            for (std::size_t k = 1; k <= n_max; ++k) a[k] = Rational(2 * inv[k - 1]);
            egf_renormalize(a);
            return a;
        }
        case SequenceFamily::eulerian:
        case SequenceFamily::carlitz_h: {
            // (1 - lambda)/(e^t - lambda); coefficients are H_n(lambda).
            if (!lambda.has_value()) {
                throw std::invalid_argument("egf_oracle: eulerian/carlitz_h need lambda");
            }
            const Rational& lam = *lambda;
            if (lam == 0 || lam == 1) {
                throw std::domain_error("egf_oracle: lambda must avoid {0, 1}");
            }
            RationalSeries den(n_max);
            den[0] = Rational(1 - lam);
            for (std::size_t k = 1; k <= n_max; ++k) {
                den[k] = make_rational(BigInt(1), factorial(static_cast<unsigned long>(k)));
            }
            RationalSeries inv = series_inverse(den);
            auto a = to_vector(series_scale(inv, Rational(1 - lam)));
            egf_renormalize(a);
            return a;
        }
        case SequenceFamily::euler_poly:
            throw std::invalid_argument("egf_oracle: use egf_euler_polynomials");
    }
    throw std::invalid_argument("egf_oracle: unknown family");
}

std::vector<RationalPolynomial> egf_euler_polynomials(std::size_t n_max) {
    // 2 e^{xt} / (e^t + 1) over Q[x].
    PolynomialSeries num(n_max), den(n_max);
    for (std::size_t k = 0; k <= n_max; ++k) {
        Rational inv_fact = make_rational(BigInt(1), factorial(static_cast<unsigned long>(k)));
        num[k] = RationalPolynomial::monomial(k, Rational(2 * inv_fact));
        den[k] = RationalPolynomial(inv_fact);
    }
    den[0] = RationalPolynomial(Rational(2));
    PolynomialSeries quotient = series_mul(num, series_inverse(den));

    std::vector<RationalPolynomial> a;
    a.reserve(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) a.push_back(quotient[k]);
    egf_renormalize(a);
    return a;
}

}  // namespace herschel
