#!/usr/bin/env python3
"""
Tests for the named modular functions and the O'Nan 3A McKay-Thompson series.
"""

from fractions import Fraction

import pytest

from onan_moonshine.errors import NotADiscriminant, PrecisionExhausted
from onan_moonshine.modular import (
    SERIES_IDS,
    c3a_coeff,
    f15_series,
    fon3a_series,
    fon_mt_3a,
    fon_series,
    hurwitz_series,
    j_series,
    named_series,
    system_residuals,
    t3_series,
    t6_series,
    theta0_series,
    vector_check,
)


def test_j_expansion():
    j = j_series(4)
    assert str(j) == "q^-1 + 744 + 196884 q + 21493760 q^2 + 864299970 q^3 + O(q^4)"
    assert j.series.is_integral()
    assert j.level == 1


def test_t3_expansion():
    t3 = t3_series(4)
    assert [t3.coefficient(n) for n in range(-1, 4)] == [1, 0, 54, -76, -243]
    assert t3.level == 3


def test_t6_is_normalized():
    t6 = t6_series(3)
    assert t6.coefficient(-1) == 1
    assert t6.coefficient(0) == 0


@pytest.mark.parametrize("builder", [fon_series, fon3a_series])
def test_onan_functions_share_principal_part(builder):
    f = builder(3)
    assert f.series.principal_part() == {Fraction(-2): Fraction(1, 2), Fraction(-1): Fraction(-1, 2)}
    assert f.coefficient(0) == 0


def test_fon_is_quadratic_in_j():
    j = j_series(6).series
    fon = fon_series(5).series
    assert fon == (j * j * Fraction(1, 2) - j * Fraction(1489, 2) + 80256).truncate(5)


def test_f15_coefficients():
    f15 = f15_series(7)
    assert [f15.coefficient(n) for n in range(1, 7)] == [1, -1, -1, -1, 1, 1]
    assert f15.weight == 2


def test_hurwitz_generating_series():
    h = hurwitz_series(9)
    assert h.coefficient(0) == Fraction(-1, 12)
    assert [h.coefficient(n) for n in (3, 4, 7, 8)] == [Fraction(1, 3), Fraction(1, 2), 1, 1]
    assert h.coefficient(5) == 0


def test_named_lookup():
    assert "J" in SERIES_IDS
    assert named_series("j", 3).series == j_series(3).series
    assert named_series("THETA0", 5).series == theta0_series(5).series
    with pytest.raises(ValueError):
        named_series("NOPE", 3)


def test_builders_reject_tiny_precision():
    with pytest.raises(ValueError):
        j_series(1)


def test_3a_leading_coefficients():
    pair = fon_mt_3a(6)
    assert [pair.comp0.coefficient(n) for n in (-1, 0, 1, 2)] == [-1, 2, 6, -188]
    assert pair.comp1.valuation().denominator == 4


def test_3a_system_residuals_vanish():
    first, second = system_residuals(fon_mt_3a(10), 10)
    assert list(first.terms()) == []
    assert list(second.terms()) == []


def test_3a_coefficients_from_series():
    assert c3a_coeff(-4) == 6
    assert c3a_coeff(-8) == -188
    assert c3a_coeff(-68) == -15834144


@pytest.mark.parametrize("D", [-7, -11, -20, -23])
def test_3a_coefficients_are_integral(D):
    assert isinstance(c3a_coeff(D), int)


@pytest.mark.parametrize("D", [5, -6, -2])
def test_3a_rejects_non_discriminants(D):
    with pytest.raises(NotADiscriminant):
        c3a_coeff(D)


def test_3a_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        c3a_coeff(-400, prec=6)


def test_vector_check_scalar_form():
    check = vector_check(fon_mt_3a(6))
    assert check.coefficient(-4) == -1
    assert check.coefficient(0) == 2
    assert check.coefficient(4) == 6
    assert check.coefficient(8) == -188
    assert check.coefficient(2) == 0
