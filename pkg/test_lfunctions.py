#!/usr/bin/env python3
"""
Tests for f15 coefficients, central L-values of its twists and the
point-count modularity comparison.
"""

import pytest

from onan_moonshine.errors import InsufficientCoefficients
from onan_moonshine.curves import E15_MINIMAL, twist15
from onan_moonshine.lfunctions import (
    F15_SIGN,
    a_coeffs,
    eta_product_coefficients,
    l_value_at_1,
    modularity_check,
    terms_needed,
    twist_sign,
    twisted_coefficients,
    twisted_l_value,
)


def test_f15_coefficients():
    assert a_coeffs(6)[1:] == [1, -1, -1, -1, 1, 1]
    assert a_coeffs(60, cross_check=True)[0] == 0


def test_eta_product_example():
    assert eta_product_coefficients({1: 1, 3: 1, 5: 1, 15: 1}, 4).tolist() == [0, 1, -1, -1, -1]
    # eta(tau)^24 = Delta
    assert eta_product_coefficients({1: 24}, 3).tolist() == [0, 1, -24, 252]


def test_eta_product_rejects_fractional_order():
    with pytest.raises(ValueError):
        eta_product_coefficients({1: 1}, 4)


def test_untwisted_l_value():
    report = l_value_at_1(a_coeffs(200), 15, F15_SIGN)
    assert abs(report.value - 0.3501507606) < 1e-6
    assert report.terms_used == terms_needed(15, 1e-8) == 12
    assert report.tail_estimate < 1e-8
    assert report.is_certified_nonzero()


def test_odd_sign_gives_zero():
    report = l_value_at_1(a_coeffs(20), 15, -1)
    assert report.value == 0.0
    assert report.terms_used == 0


def test_l_value_rejects_bad_input():
    with pytest.raises(InsufficientCoefficients):
        l_value_at_1(a_coeffs(5), 15, 1)
    with pytest.raises(ValueError):
        l_value_at_1(a_coeffs(20), 15, 0)


@pytest.mark.parametrize("D", [-8, -23, -47, -68, -83])
def test_admissible_twists_have_even_sign(D):
    assert twist_sign(D) == 1


def test_twisted_coefficients():
    twisted = twisted_coefficients(a_coeffs(6), -8)
    # (-8/n) for n = 1..6: 1, 0, 1, 0, -1, 0
    assert twisted == [0, 1, 0, -1, 0, -1, 0]


def test_twisted_l_values():
    assert twisted_l_value(-8).is_certified_nonzero()
    assert abs(twisted_l_value(-68).value) < 1e-4
    assert not twisted_l_value(-68).is_certified_nonzero()


def test_twist_must_be_prime_to_level():
    with pytest.raises(ValueError):
        twisted_l_value(-15)
    with pytest.raises(ValueError):
        twisted_l_value(-20)


def test_modularity_of_e15():
    rows = modularity_check(E15_MINIMAL, a_coeffs(100), 97)
    assert [row.p for row in rows][:4] == [2, 3, 5, 7]
    assert all(row.match for row in rows)
    assert {row.p for row in rows if row.bad} == {3, 5}


def test_modularity_of_twist():
    D = -8
    coeffs = twisted_coefficients(a_coeffs(60), D)
    rows = modularity_check(twist15(D), coeffs, 60, level=15 * D * D)
    assert all(row.match for row in rows if not row.bad)


def test_modularity_needs_coefficients():
    with pytest.raises(InsufficientCoefficients):
        modularity_check(E15_MINIMAL, a_coeffs(10), 50)
