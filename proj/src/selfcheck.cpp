#include "herschel/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "herschel/polylog.hpp"
#include "herschel/polynomial.hpp"
#include "herschel/rational.hpp"
#include "herschel/sequences.hpp"
#include "herschel/series.hpp"
#include "herschel/transform.hpp"
#include "herschel/zero_differences.hpp"

namespace herschel {

namespace {

// Delta^j 0^n by the alternating binomial sum, independent of the table.
BigInt delta_direct(std::size_t j, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t k = 0; k <= j; ++k) {
        BigInt kn;
        mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(n));
        BigInt term = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)) * kn;
        if ((j - k) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

std::vector<BigInt> bell_numbers(std::size_t n_max) {
    // Bell triangle; row n starts with the previous row's last entry, and
    // that starting entry is B_n.
    std::vector<BigInt> bell{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

// Coefficient of lambda^k in A_n = permutations of {1..n} with k-1 descents.
std::vector<BigInt> descent_counts(std::size_t n) {
    std::vector<BigInt> counts(n + 1, BigInt(0));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::size_t descents = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (perm[k] > perm[k + 1]) ++descents;
        }
        counts[descents + 1] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

}  // namespace

int run_selfcheck(std::ostream& os) {
    int failures = 0;
    auto check = [&](const char* name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        os << (ok ? "ok - " : "FAIL - ") << name << note << "\n";
        if (!ok) ++failures;
    };

    check("difference-table-vs-direct-sum", [] {
        for (std::size_t n = 0; n <= 20; ++n) {
            for (std::size_t j = 0; j <= n; ++j) {
                if (delta_zero(j, n) != delta_direct(j, n)) return false;
            }
        }
        return true;
    });

    check("diagonal-is-factorial", [] {
        for (std::size_t n = 0; n <= 60; ++n) {
            if (delta_zero(n, n) != factorial(static_cast<unsigned long>(n))) return false;
        }
        return true;
    });

    check("stirling-row-sums-are-bell", [] {
        auto bell = bell_numbers(20);
        for (std::size_t n = 0; n <= 20; ++n) {
            BigInt sum = 0;
            for (std::size_t j = 0; j <= n; ++j) sum += stirling2(n, j);
            if (sum != bell[n]) return false;
        }
        return true;
    });

    check("transform-matches-composition-random", [] {
        std::mt19937 rng(427);
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        for (int rep = 0; rep < 6; ++rep) {
            const std::size_t order = 18;
            std::vector<Rational> c(order + 1);
            for (auto& q : c) q = make_rational(num(rng), den(rng));
            auto via_transform = herschel_coefficients(c, order);
            auto via_compose = compose_with_one_minus_exp(RationalSeries(c), order);
            for (std::size_t n = 0; n <= order; ++n) {
                if (via_transform[n] != via_compose[n]) return false;
            }
        }
        return true;
    });

    check("transform-matches-composition-families", [] {
        const std::size_t order = 15;
        std::vector<Rational> bern(order + 1), gen(order + 1), carl(order + 1);
        for (std::size_t j = 0; j <= order; ++j) {
            bern[j] = bernoulli_provider_coefficient(j);
            gen[j] = genocchi_provider_coefficient(j);
            carl[j] = carlitz_provider_coefficient(j, Rational(2));
        }
        for (const auto& c : {bern, gen, carl}) {
            auto via_transform = herschel_coefficients(c, order);
            auto via_compose = compose_with_one_minus_exp(RationalSeries(c), order);
            for (std::size_t n = 0; n <= order; ++n) {
                if (via_transform[n] != via_compose[n]) return false;
            }
        }
        PolynomialSeries euler_c = euler_provider_coefficients(order);
        auto via_transform = herschel_coefficients<RationalPolynomial>(
            [&euler_c](std::size_t j) { return euler_c[j]; }, order);
        auto via_compose = compose_with_one_minus_exp(euler_c, order);
        for (std::size_t n = 0; n <= order; ++n) {
            if (!(via_transform[n] == via_compose[n])) return false;
        }
        return true;
    });

    check("bernoulli-egf-oracle", [] {
        auto oracle = egf_oracle(SequenceFamily::bernoulli, 30);
        auto route = bernoulli_numbers(30);
        return std::equal(route.begin(), route.end(), oracle.begin());
    });

    check("bernoulli-recurrence", [] {
        auto b = bernoulli_numbers(30);
        for (std::size_t n = 1; n <= 30; ++n) {
            Rational sum = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                sum += Rational(binomial(static_cast<unsigned long>(n + 1),
                                         static_cast<unsigned long>(k)) *
                                b[k]);
            }
            if (sum != 0) return false;
        }
        return b[12] == make_rational(-691, 2730);
    });

    check("euler-polynomials-egf-oracle", [] {
        auto oracle = egf_euler_polynomials(15);
        auto route = euler_polynomials(15);
        for (std::size_t n = 0; n <= 15; ++n) {
            if (!(route[n] == oracle[n])) return false;
        }
        return true;
    });

    check("euler-functional-equation", [] {
        for (std::size_t n = 0; n <= 15; ++n) {
            RationalPolynomial e = euler_polynomial(n);
            RationalPolynomial lhs = e.shifted(Rational(1)) + e;
            if (!(lhs == RationalPolynomial::monomial(n, Rational(2)))) return false;
        }
        return true;
    });

    check("euler-numbers-integral", [] {
        return euler_number(0) == 1 && euler_number(2) == -1 && euler_number(4) == 5 &&
               euler_number(6) == -61;
    });

    check("eulerian-matches-frobenius", [] {
        for (std::size_t n = 1; n <= 15; ++n) {
            if (!(eulerian_polynomial(n) == frobenius_eulerian(n))) return false;
        }
        return true;
    });

    check("eulerian-descent-counts", [] {
        for (std::size_t n = 1; n <= 6; ++n) {
            auto counts = descent_counts(n);
            RationalPolynomial a = eulerian_polynomial(n);
            for (std::size_t k = 0; k <= n; ++k) {
                if (a.coeff(k) != Rational(counts[k])) return false;
            }
        }
        return true;
    });

    check("eulerian-at-one-is-factorial", [] {
        for (std::size_t n = 1; n <= 15; ++n) {
            if (eulerian_polynomial(n)(Rational(1)) != Rational(factorial(n))) return false;
        }
        return true;
    });

    check("carlitz-matches-eulerian-pointwise", [] {
        const Rational lambdas[] = {Rational(2), make_rational(1, 3), Rational(-1),
                                    make_rational(5, 2), make_rational(-3, 7)};
        for (const Rational& lam : lambdas) {
            if (carlitz_h(0, lam) != 1) return false;
            for (std::size_t n = 1; n <= 10; ++n) {
                Rational lhs(carlitz_h(n, lam) * lam *
                             rational_pow(Rational(lam - 1), static_cast<unsigned long>(n)));
                if (lhs != eulerian_polynomial(n)(lam)) return false;
            }
        }
        return true;
    });

    check("carlitz-egf-oracle", [] {
        auto oracle = egf_oracle(SequenceFamily::carlitz_h, 12, Rational(2));
        for (std::size_t n = 0; n <= 12; ++n) {
            if (carlitz_h(n, Rational(2)) != oracle[n]) return false;
        }
        return true;
    });

    check("genocchi-egf-oracle", [] {
        auto oracle = egf_oracle(SequenceFamily::genocchi, 20);
        for (std::size_t n = 1; n <= 20; ++n) {
            if (Rational(genocchi(n)) != oracle[n]) return false;
        }
        return true;
    });

    check("genocchi-bernoulli-identity", [] {
        for (std::size_t n = 1; n <= 20; ++n) {
            BigInt pow2 = BigInt(1) << static_cast<unsigned long>(n);
            Rational expect(Rational(2) * (1 - Rational(pow2)) * bernoulli(n));
            if (Rational(genocchi(n)) != expect) return false;
            if (n >= 3 && n % 2 == 1 && genocchi(n) != 0) return false;
        }
        return true;
    });

    check("polylog-first-coefficient-is-one", [] {
        for (std::complex<double> s : {std::complex<double>(2, 0), std::complex<double>(1, 1),
                                       std::complex<double>(-1.5, 0)}) {
            auto b = polylog_coefficients(s, 4);
            if (std::abs(b[1] - std::complex<double>(1, 0)) > 1e-14) return false;
        }
        return true;
    });

    check("polylog-log-series-collapses", [] {
        auto b = polylog_coefficients({1, 0}, 20);
        for (std::size_t n = 2; n <= 20; ++n) {
            if (std::abs(b[n]) > 1e-15) return false;
        }
        return true;
    });

    check("polylog-b2-at-s2", [] {
        auto b = polylog_coefficients({2, 0}, 2);
        return std::abs(b[2] - std::complex<double>(-0.25, 0)) < 1e-15;
    });

    check("polylog-closed-forms", [] {
        for (double x : {-0.5, 0.25, 0.55, -0.2}) {
            PolylogRequest req;
            req.x = {x, 0};
            req.s = {1, 0};
            auto r1 = polylog_eval(req);
            if (!close(r1.value, -std::log(std::complex<double>(1 - x, 0)), 1e-12)) return false;
            req.s = {0, 0};
            auto r0 = polylog_eval(req);
            if (!close(r0.value, std::complex<double>(x / (1 - x), 0), 1e-12)) return false;
            req.s = {-2, 0};
            auto rm2 = polylog_eval(req);
            double want = x * (1 + x) / std::pow(1 - x, 3);
            if (!close(rm2.value, std::complex<double>(want, 0), 1e-11)) return false;
        }
        return true;
    });

    check("polylog-continuation-values", [] {
        PolylogRequest req;
        req.s = {2, 0};
        req.x = {-1, 0};
        auto r = polylog_eval(req);
        const double pi = 3.14159265358979323846;
        if (std::abs(r.value.real() + pi * pi / 12) > 1e-11) return false;
        if (r.status != PolylogStatus::converged) return false;
        req.x = {0.5, 0};
        r = polylog_eval(req);
        double ln2 = std::log(2.0);
        return std::abs(r.value.real() - (pi * pi / 12 - ln2 * ln2 / 2)) < 1e-12;
    });

    check("polylog-direct-agreement", [] {
        const std::complex<double> ss[] = {{2, 0}, {-1.5, 0}, {1, 1}, {3, -2}};
        const std::complex<double> xs[] = {{0.5, 0}, {-0.6, 0}, {0.3, 0.4}, {0, -0.55}};
        for (auto s : ss) {
            for (auto x : xs) {
                PolylogRequest req;
                req.s = s;
                req.x = x;
                req.rel_tol = 1e-13;
                req.max_terms = 500;
                auto r = polylog_eval(req);
                if (!close(r.value, polylog_direct(s, x, 1e-15), 1e-10)) return false;
            }
        }
        return true;
    });

    check("polylog-duplication", [] {
        const std::complex<double> ss[] = {{2, 0}, {3, 0}, {1.5, 0}};
        const std::complex<double> xs[] = {{0.3, 0}, {0, 0.4}, {-0.25, 0.25}};
        for (std::size_t k = 0; k < 3; ++k) {
            PolylogRequest req;
            req.s = ss[k];
            req.rel_tol = 1e-13;
            req.max_terms = 500;
            req.x = xs[k];
            auto plus = polylog_eval(req);
            req.x = -xs[k];
            auto minus = polylog_eval(req);
            req.x = xs[k] * xs[k];
            auto sq = polylog_eval(req);
            auto lhs = plus.value + minus.value;
            auto rhs = std::pow(std::complex<double>(2, 0), 1.0 - ss[k]) * sq.value;
            if (!close(lhs, rhs, 1e-9)) return false;
        }
        return true;
    });

    return failures;
}

}  // namespace herschel
