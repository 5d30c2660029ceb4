#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "herschel/errors.hpp"
#include "herschel/polylog.hpp"
#include "herschel/rational.hpp"
#include "herschel/sequences.hpp"

using herschel::PolylogRequest;
using herschel::PolylogResult;
using herschel::PolylogStatus;
using std::complex;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(complex<double> got, complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

PolylogResult eval(complex<double> s, complex<double> x) {
    PolylogRequest req;
    req.s = s;
    req.x = x;
    return herschel::polylog_eval(req);
}

}  // namespace

TEST_SUITE("polylog") {

TEST_CASE("first coefficient is one for every s") {
    for (complex<double> s : {complex<double>(2), complex<double>(1, 1),
                              complex<double>(-1.5), complex<double>(3, -2)}) {
        std::vector<complex<double>> b = herschel::polylog_coefficients(s, 6);
        CHECK(b[0] == complex<double>(0));
        CHECK(std::abs(b[1] - 1.0) <= 1e-15);
    }
}

TEST_CASE("s = 1 collapses to the bare logarithm") {
    // Li_1(x) = -ln(1-x) = t exactly, so b_1 = 1 and the rest vanish.
    std::vector<complex<double>> b = herschel::polylog_coefficients(complex<double>(1), 20);
    CHECK(std::abs(b[1] - 1.0) <= 1e-15);
    for (std::size_t n = 2; n <= 20; ++n) CHECK(std::abs(b[n]) <= 1e-15);
}

TEST_CASE("pinned coefficient rows") {
    SUBCASE("s = 2 starts 1, -1/4, and even rows past 2 vanish") {
        std::vector<complex<double>> b = herschel::polylog_coefficients(complex<double>(2), 12);
        CHECK(std::abs(b[1] - 1.0) <= 1e-15);
        CHECK(std::abs(b[2] + 0.25) <= 1e-15);
        for (std::size_t n = 4; n <= 12; n += 2) CHECK(std::abs(b[n]) <= 1e-18);
    }
    SUBCASE("s = 0 gives the coefficients of e^t - 1") {
        std::vector<complex<double>> b = herschel::polylog_coefficients(complex<double>(0), 15);
        double fact = 1.0;
        for (std::size_t n = 1; n <= 15; ++n) {
            fact *= static_cast<double>(n);
            CHECK(rel_err(b[n], complex<double>(1.0 / fact)) <= 1e-14);
        }
    }
    SUBCASE("s = -2 gives the coefficients of 2e^{3t} - 3e^{2t} + e^t") {
        std::vector<complex<double>> b = herschel::polylog_coefficients(complex<double>(-2), 15);
        double fact = 1.0;
        for (std::size_t n = 1; n <= 15; ++n) {
            fact *= static_cast<double>(n);
            double expect =
                (2.0 * std::pow(3.0, static_cast<double>(n)) -
                 3.0 * std::pow(2.0, static_cast<double>(n)) + 1.0) / fact;
            CHECK(rel_err(b[n], complex<double>(expect)) <= 1e-13);
        }
    }
}

TEST_CASE("elementary closed forms on a grid") {
    const complex<double> pts[] = {{-0.5, 0.0}, {0.25, 0.0}, {0.55, 0.0}, {-0.2, 0.0},
                                   {0.3, 0.4},  {0.0, -0.5}, {-0.4, 0.3}, {0.1, 0.55}};
    for (complex<double> x : pts) {
        // Li_1(x) = -ln(1-x)
        PolylogResult r1 = eval(complex<double>(1), x);
        CHECK(r1.status == PolylogStatus::converged);
        CHECK(std::abs(r1.value + std::log(complex<double>(1) - x)) <= 1e-12);

        // Li_0(x) = x/(1-x)
        PolylogResult r0 = eval(complex<double>(0), x);
        CHECK(r0.status == PolylogStatus::converged);
        CHECK(std::abs(r0.value - x / (complex<double>(1) - x)) <= 1e-12);

        // Li_{-2}(x) = x(1+x)/(1-x)^3
        PolylogResult rm2 = eval(complex<double>(-2), x);
        complex<double> one(1);
        complex<double> want = x * (one + x) / std::pow(one - x, 3);
        CHECK(rm2.status == PolylogStatus::converged);
        CHECK(rel_err(rm2.value, want) <= 1e-11);
    }
}

TEST_CASE("classical continuation values") {
    PolylogResult at_minus_one = eval(complex<double>(2), complex<double>(-1));
    CHECK(at_minus_one.status == PolylogStatus::converged);
    CHECK(std::abs(at_minus_one.value - complex<double>(-kPi * kPi / 12.0)) <= 1e-11);

    PolylogResult at_half = eval(complex<double>(2), complex<double>(0.5));
    const double ln2 = std::log(2.0);
    CHECK(at_half.status == PolylogStatus::converged);
    CHECK(std::abs(at_half.value - complex<double>(kPi * kPi / 12.0 - ln2 * ln2 / 2.0)) <= 1e-12);
}

TEST_CASE("agrees with the defining series inside its disk") {
    const complex<double> svals[] = {{2, 0}, {-1.5, 0}, {1, 1}, {3, -2}};
    const complex<double> xvals[] = {{0.5, 0}, {-0.6, 0}, {0.3, 0.4}, {0.0, -0.55}, {0.2, -0.2}};
    for (complex<double> s : svals) {
        for (complex<double> x : xvals) {
            PolylogResult r = eval(s, x);
            complex<double> direct = herschel::polylog_direct(s, x);
            CHECK(r.status == PolylogStatus::converged);
            CHECK(std::abs(r.value - direct) <= 1e-10 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("square duplication identity") {
    struct Pair { complex<double> s, x; };
    const Pair pairs[] = {{{2, 0}, {0.3, 0}}, {{3, 0}, {0.0, 0.4}}, {{1.5, 0}, {-0.25, 0.25}}};
    for (const Pair& p : pairs) {
        complex<double> lhs = eval(p.s, p.x).value + eval(p.s, -p.x).value;
        complex<double> rhs =
            std::pow(complex<double>(2), complex<double>(1) - p.s) * eval(p.s, p.x * p.x).value;
        CHECK(rel_err(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("trivial point and cut handling") {
    PolylogResult zero = eval(complex<double>(2), complex<double>(0));
    CHECK(zero.value == complex<double>(0));
    CHECK(zero.terms_used == 0);
    CHECK(zero.status == PolylogStatus::converged);
    CHECK(zero.abs_error_estimate == 0.0);

    for (double x : {1.0, 1.5, 2.0, 100.0}) {
        CHECK_THROWS_AS(eval(complex<double>(2), complex<double>(x)), std::domain_error);
    }
    // Just off the cut is legal input (it may land outside the guard instead).
    CHECK_NOTHROW(eval(complex<double>(2), complex<double>(1.5, 0.1)));
}

TEST_CASE("statuses degrade honestly") {
    SUBCASE("outside the guard radius") {
        PolylogResult r = eval(complex<double>(2), complex<double>(1.5, 0.1));
        CHECK(r.status == PolylogStatus::outside_guard);
        CHECK(std::isnan(r.value.real()));
        CHECK(std::isinf(r.abs_error_estimate));
        CHECK(r.terms_used == 0);
    }
    SUBCASE("truncated by the term budget") {
        PolylogRequest req;
        req.s = complex<double>(2);
        req.x = complex<double>(-0.9);
        req.max_terms = 5;
        PolylogResult r = herschel::polylog_eval(req);
        CHECK(r.status == PolylogStatus::truncated);
        CHECK(r.terms_used == 5);
        CHECK(std::isfinite(r.abs_error_estimate));
        CHECK(r.abs_error_estimate > 0.0);
    }
    SUBCASE("converged estimates respect the tolerance") {
        const complex<double> xs[] = {{-0.8, 0.0}, {0.5, 0.3}, {0.0, 0.6}, {-0.3, -0.3}};
        for (complex<double> x : xs) {
            PolylogResult r = eval(complex<double>(1.5), x);
            REQUIRE(r.status == PolylogStatus::converged);
            CHECK(r.abs_error_estimate <=
                  1e-15 * std::abs(r.value) + std::numeric_limits<double>::min());
            CHECK(r.terms_used >= 3);
        }
    }
    SUBCASE("request validation") {
        PolylogRequest req;
        req.s = complex<double>(2);
        req.x = complex<double>(0.5);
        req.rel_tol = 0.0;
        CHECK_THROWS_AS(herschel::polylog_eval(req), std::invalid_argument);
        req.rel_tol = 1e-15;
        req.radius_guard = 0.0;
        CHECK_THROWS_AS(herschel::polylog_eval(req), std::invalid_argument);
        req.radius_guard = 0.99;
        req.max_terms = 0;
        CHECK_THROWS_AS(herschel::polylog_eval(req), std::invalid_argument);
    }
}

TEST_CASE("automatic precision is stable against doubling") {
    const std::size_t n_max = 80;
    std::vector<complex<double>> auto_b =
        herschel::polylog_coefficients(complex<double>(2), n_max);
    std::vector<complex<double>> wide_b = herschel::polylog_coefficients(
        complex<double>(2), n_max, 2 * herschel::polylog_auto_precision(n_max));
    double scale = 0.0;
    for (const complex<double>& b : wide_b) scale = std::max(scale, std::abs(b));
    for (std::size_t n = 0; n <= n_max; ++n) {
        // Rows resolved at the doubled precision must agree row-relative.
        // Rows that are exactly zero carry only guard-bit noise; for them the
        // residual must sit 10 orders below the sequence scale, which is what
        // the 64 guard bits are there to deliver.
        const double diff = std::abs(auto_b[n] - wide_b[n]);
        if (std::abs(wide_b[n]) >= scale * 0x1p-52) {
            CHECK(diff <= 1e-10 * std::abs(wide_b[n]));
        } else {
            CHECK(diff <= 1e-10 * scale);
        }
    }
}

TEST_CASE("explicit low precision is refused, ample precision accepted") {
    CHECK_THROWS_AS(herschel::polylog_coefficients(complex<double>(2), 40, 64),
                    herschel::precision_error);
    std::vector<complex<double>> wide =
        herschel::polylog_coefficients(complex<double>(2), 20, 4096);
    std::vector<complex<double>> auto_b = herschel::polylog_coefficients(complex<double>(2), 20);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(std::abs(wide[n] - auto_b[n]) <= 1e-13 * (1.0 + std::abs(auto_b[n])));
    }
}

TEST_CASE("defining series helper") {
    CHECK_THROWS_AS(herschel::polylog_direct(complex<double>(2), complex<double>(0.8)),
                    std::domain_error);
    CHECK(std::abs(herschel::polylog_direct(complex<double>(0), complex<double>(0.25)) -
                   complex<double>(1.0 / 3.0)) <= 1e-15);
    CHECK(std::abs(herschel::polylog_direct(complex<double>(2), complex<double>(0.5)) -
                   complex<double>(0.5822405264650125)) <= 1e-14);
}

}  // TEST_SUITE
