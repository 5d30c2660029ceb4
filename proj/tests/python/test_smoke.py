"""Smoke tests for the python bindings; the exact math lives in the C++ suite."""

import math
from fractions import Fraction

import pytest

import herschel


def test_difference_table():
    assert herschel.delta_zero(3, 3) == 6
    assert herschel.delta_zero(0, 5) == 0
    assert herschel.stirling2(10, 5) == 42525
    assert herschel.stirling2(4, 2) == 7


def test_bernoulli():
    assert herschel.bernoulli(12) == Fraction(-691, 2730)
    numbers = herschel.bernoulli_numbers(6)
    assert numbers == [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-1, 30),
        Fraction(0),
        Fraction(1, 42),
    ]


def test_euler():
    assert herschel.euler_polynomial(3) == [Fraction(1, 4), Fraction(0), Fraction(-3, 2), Fraction(1)]
    assert herschel.euler_number(4) == 5
    assert herschel.euler_number(6) == -61


def test_eulerian_and_carlitz():
    assert herschel.eulerian_polynomial(3) == [0, 1, 4, 1]
    assert herschel.carlitz_h(2, 2) == Fraction(3)
    assert herschel.carlitz_h(2, Fraction(1, 3)) == herschel.carlitz_h(2, "1/3")
    with pytest.raises(ValueError):
        herschel.carlitz_h(3, 1)


def test_genocchi():
    assert herschel.genocchi(4) == 1
    assert herschel.genocchi(8) == 17
    with pytest.raises(ValueError):
        herschel.genocchi(0)


def test_polylog():
    res = herschel.polylog(2, -1)
    assert res["status"] == "converged"
    assert abs(res["value"] - (-math.pi**2 / 12)) <= 1e-11
    assert res["abs_error_estimate"] <= 1e-15 * abs(res["value"]) + 2.3e-308

    coeffs = herschel.polylog_coefficients(2, 4)
    assert coeffs[0] == 0
    assert abs(coeffs[1] - 1) <= 1e-15
    assert abs(coeffs[2] + 0.25) <= 1e-15

    with pytest.raises(ValueError):
        herschel.polylog(2, 1.5)
