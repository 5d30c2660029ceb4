#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "herschel/mpfloat.hpp"

namespace herschel {

/// Provider coefficient c_j evaluated at the working precision.
using NumericProvider = std::function<mp::Complex(std::size_t j, mpfr_prec_t prec)>;

/// One EGF row: s_n = (-1)^n sum_{j<=n} (-1)^j c_j Delta^j 0^n, fixed precision.
/// The n! division is left to the caller so integer-valued rows stay exact.
mp::Complex herschel_row_raw(const NumericProvider& provider, std::size_t n, mpfr_prec_t prec);

/// a_n = s_n / n! for n = 0..n_max, each row at the given precision.
std::vector<mp::Complex> herschel_coefficients_numeric(const NumericProvider& provider,
                                                       std::size_t n_max, mpfr_prec_t prec);

}  // namespace herschel
