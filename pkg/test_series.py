#!/usr/bin/env python3
"""
Tests for exact q-series arithmetic and the eta/theta constructors.
"""

from fractions import Fraction

import pytest

from onan_moonshine.errors import PrecisionExhausted, ZeroLeadingCoefficient
from onan_moonshine.series import (
    FracSeries,
    eta_character,
    eta_product_form,
    eta_quotient,
    eta_series,
    theta1_mr,
    theta_check,
    theta_r,
)


def _series(terms, prec):
    return FracSeries.from_terms(terms, prec)


A = _series({0: 1, 1: 2, 3: -1}, 6)
B = _series({0: 3, 2: 1}, 6)
C = _series({-1: 1, 0: 5}, 6)


def test_rendering():
    j = _series({-1: 1, 0: 744, 1: 196884}, 2)
    assert str(j) == "q^-1 + 744 + 196884 q + O(q^2)"
    assert str(_series({-1: -1, 0: 2, 1: 6}, 2)) == "-q^-1 + 2 + 6 q + O(q^2)"
    assert str(FracSeries.zero(3)) == "O(q^3)"
    half = _series({Fraction(1, 2): Fraction(-1, 2)}, 1)
    assert str(half) == "-1/2 q^1/2 + O(q^1)"


def test_inspection():
    s = _series({-2: Fraction(1, 2), -1: Fraction(-1, 2), 1: 7}, 3)
    assert s.valuation() == -2
    assert s.precision == 3
    assert s.coefficient(1) == 7
    assert s.coefficient(0) == 0
    assert s.coefficient(Fraction(1, 3)) == 0
    assert s.principal_part() == {Fraction(-2): Fraction(1, 2), Fraction(-1): Fraction(-1, 2)}
    assert not s.is_integral()
    assert s.coefficient_denominators() == [1, 2]


def test_coefficient_beyond_window_raises():
    with pytest.raises(PrecisionExhausted):
        A.coefficient(6)


def test_immutable():
    with pytest.raises(AttributeError):
        A.prec = 10


def test_ring_laws():
    assert (A * B) * C == A * (B * C)
    assert A * B == B * A
    assert A * (B + C) == A * B + A * C
    assert A - A == FracSeries.zero(6)
    assert A + 0 == A


def test_product_precision_tracks_valuations():
    # known below min(prec_a + val_b, prec_b + val_a)
    assert (A * C).precision == 5
    shifted = _series({2: 1}, 6)
    assert (A * shifted).precision == 6


def test_inverse():
    assert A * A.invert() == FracSeries.constant(1, 6)
    inv = C.invert()
    assert inv.valuation() == 1
    assert inv.coefficient(1) == 1
    assert inv.coefficient(2) == -5


def test_invert_zero_raises():
    with pytest.raises(ZeroLeadingCoefficient):
        FracSeries.zero(4).invert()


def test_powers():
    assert A ** 3 == A * A * A
    assert (A ** -2) * (A ** 2) == FracSeries.constant(1, 6)
    assert A ** 0 == FracSeries.constant(1, 6)


def test_scalar_arithmetic():
    s = A * Fraction(1, 2) + 1
    assert s.coefficient(0) == Fraction(3, 2)
    assert (A / 2).coefficient(1) == 1
    assert (-A).coefficient(3) == 1
    assert (3 - A).coefficient(0) == 2


def test_q_derivative_and_rescale():
    j = _series({-1: 1, 0: 744, 1: 196884}, 2)
    d = j.q_derivative()
    assert d.coefficient(-1) == -1
    assert d.coefficient(0) == 0
    assert d.coefficient(1) == 196884
    r = j.rescale(2)
    assert r.coefficient(-2) == 1
    assert r.coefficient(2) == 196884
    assert r.precision == 4
    assert j.rescale(Fraction(1, 2)).coefficient(Fraction(-1, 2)) == 1


def test_truncate_and_normalize():
    s = A.truncate(2)
    assert s.precision == 2
    assert str(s) == "1 + 2 q + O(q^2)"
    wide = A.with_denom(6)
    assert wide.denom == 6
    assert wide.normalize().denom == 1
    assert wide == A


def test_compose_polynomial():
    assert C.compose_polynomial([0, 0, 1]) == C * C
    assert C.compose_polynomial([7, 1]) == C + 7
    assert C.compose_polynomial([]) == FracSeries.zero(C.precision)


def test_mixed_denominators_add():
    s = _series({Fraction(1, 4): 1}, 2) + _series({Fraction(1, 3): 1}, 2)
    assert s.denom == 12
    assert s.coefficient(Fraction(1, 4)) == 1
    assert s.coefficient(Fraction(1, 3)) == 1


@pytest.mark.parametrize("n,expected", [(1, 1), (5, -1), (7, -1), (11, 1), (13, 1), (2, 0), (3, 0)])
def test_eta_character(n, expected):
    assert eta_character(n) == expected


def test_eta_euler_identity_matches_product():
    assert eta_series(10) == eta_product_form(10)


def test_eta_series_leading_terms():
    eta = eta_series(3)
    assert eta.valuation() == Fraction(1, 24)
    assert eta.coefficient(Fraction(25, 24)) == -1
    assert eta.coefficient(Fraction(49, 24)) == -1
    assert eta.precision == Fraction(73, 24)


def test_eta_quotient_delta():
    # Delta = eta^24 = q - 24 q^2 + 252 q^3 - 1472 q^4 + ...
    delta = eta_quotient({1: 24}, 4)
    assert [delta.coefficient(n) for n in range(1, 5)] == [1, -24, 252, -1472]


def test_eta_quotient_t3():
    t3 = eta_quotient({1: 12, 3: -12}, 4) + 12
    assert t3.coefficient(-1) == 1
    assert t3.coefficient(0) == 0
    assert t3.coefficient(1) == 54
    assert t3.coefficient(2) == -76


def test_theta_series():
    assert str(theta_r(0, 5)) == "1 + 2 q + 2 q^4 + O(q^5)"
    theta1 = theta_r(1, 3)
    assert theta1.coefficient(Fraction(1, 4)) == 2
    assert theta1.coefficient(Fraction(9, 4)) == 2
    with pytest.raises(ValueError):
        theta_r(2, 5)


def test_theta_check_is_sum_of_squares():
    check = theta_check(10)
    assert [check.coefficient(n) for n in range(10)] == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]


def test_unary_theta():
    s = theta1_mr(1, 1, 3)
    # n = +-1, +-3 with weight n: q^(1/4) (1 - 1) vanishes
    assert s.coefficient(Fraction(1, 4)) == 0
    s = theta1_mr(3, 1, 3)
    # n = 1, -5 below the bound: exponents 1/12, 25/12
    assert s.coefficient(Fraction(1, 12)) == 1
    assert s.coefficient(Fraction(25, 12)) == -5
