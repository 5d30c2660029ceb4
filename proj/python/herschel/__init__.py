from ._core import (
    bernoulli,
    bernoulli_numbers,
    carlitz_h,
    delta_zero,
    euler_number,
    euler_polynomial,
    eulerian_polynomial,
    genocchi,
    polylog,
    polylog_coefficients,
    stirling2,
)

__all__ = [
    "bernoulli",
    "bernoulli_numbers",
    "carlitz_h",
    "delta_zero",
    "euler_number",
    "euler_polynomial",
    "eulerian_polynomial",
    "genocchi",
    "polylog",
    "polylog_coefficients",
    "stirling2",
]
