#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <mpfr.h>

namespace herschel {

struct PolylogRequest {
    std::complex<double> s;
    std::complex<double> x;
    double rel_tol = 1e-15;
    std::size_t max_terms = 200;
    double radius_guard = 0.99;
    /// Working precision for the coefficient rows; 0 selects per-row
    /// automatic precision (64 bits beyond the largest Delta^j 0^n).
    mpfr_prec_t precision_bits = 0;
};

enum class PolylogStatus { converged, truncated, outside_guard };

struct PolylogResult {
    std::complex<double> value;
    double abs_error_estimate = 0.0;
    std::size_t terms_used = 0;
    PolylogStatus status = PolylogStatus::converged;
};

const char* to_string(PolylogStatus status);

/// Continuation coefficients b_0..b_{n_max} (b_0 = 0) of
/// Li_s(x) = sum_{n>=1} b_n t^n, t = -Log(1-x):
///   b_n = ((-1)^n/n!) sum_{j=1..n} (-1)^j j^{-s} Delta^j 0^n.
/// precision_bits = 0 selects automatic per-row precision; an explicit
/// precision is shadow-checked at twice the bits and throws precision_error
/// on disagreement.  Results are cached per (s, precision_bits).
std::vector<std::complex<double>> polylog_coefficients(std::complex<double> s, std::size_t n_max,
                                                       mpfr_prec_t precision_bits = 0);

/// Precision that keeps >= 64 significant bits through the row-n cancellation.
mpfr_prec_t polylog_auto_precision(std::size_t n);

/// Li_s(x) on the cut plane C minus [1, inf).
PolylogResult polylog_eval(const PolylogRequest& req);

/// Defining series sum_{n>=1} x^n/n^s, |x| <= 0.75 enforced; cross-check only.
std::complex<double> polylog_direct(std::complex<double> s, std::complex<double> x,
                                    double rel_tol = 1e-15);

}  // namespace herschel
