#!/usr/bin/env python3
"""
Tests for Weierstrass models, rational points and point counting.
"""

from fractions import Fraction

import pytest
from sympy import primerange

from onan_moonshine.forms import kronecker
from onan_moonshine.errors import NotPrime, PointNotOnCurve, PrimeBoundExceeded, SingularCurve
from onan_moonshine.curves import (
    E15_DIVISOR,
    E15_MINIMAL,
    E15_X_SUBSTITUTION,
    E15_Y_SUBSTITUTION,
    INFINITY,
    RationalPoint,
    WeierstrassCurve,
    a_p,
    a_p_table,
    count_points_mod_p,
    is_on_curve,
    j_invariant,
    plausibly_infinite_order,
    point_add,
    point_multiply,
    point_negate,
    point_order,
    satisfies_hasse,
    torsion_points,
    torsion_subgroup,
    twist14,
    twist15,
    verify_minimal_substitution,
)

E15_J = Fraction(111284641, 50625)

# E15 (x) -68 and two independent generators of its rank 2 group
E_68 = twist15(-68)
P = RationalPoint(852, 179712)
Q = RationalPoint(-3468, 499392)
# x = -68 u for the root u = -21 of u^3 - 12987 u - 263466
T = RationalPoint(1428, 0)


def test_twist_models():
    assert twist15(-8).coefficients == (0, 0, 0, -831168, 134894592)
    assert twist15(-68).coefficients == (0, 0, 0, -60051888, 82842141312)
    assert twist14(1).coefficients == (0, 0, 0, 5805, -285714)
    with pytest.raises(ValueError):
        twist15(0)


def test_j_invariant_is_twist_invariant():
    assert j_invariant(E15_MINIMAL) == E15_J
    for D in (1, -8, -68, 5):
        assert j_invariant(twist15(D)) == E15_J
    assert j_invariant(twist14(-7)) == j_invariant(twist14(1))


def test_minimal_model():
    assert E15_MINIMAL.discriminant == 50625
    assert verify_minimal_substitution(
        twist15(1), E15_MINIMAL, E15_X_SUBSTITUTION, E15_Y_SUBSTITUTION, E15_DIVISOR
    )
    assert not verify_minimal_substitution(
        twist15(1), E15_MINIMAL, E15_X_SUBSTITUTION, E15_Y_SUBSTITUTION, E15_DIVISOR - 1
    )


@pytest.mark.parametrize("A,B", [(0, 0), (-3, 2)])
def test_singular_curves_rejected(A, B):
    with pytest.raises(SingularCurve):
        WeierstrassCurve.short(A, B)


def test_generators_lie_on_curve():
    assert is_on_curve(E_68, P)
    assert is_on_curve(E_68, Q)
    assert is_on_curve(E_68, T)
    assert not is_on_curve(E_68, RationalPoint(1, 1))


def test_group_law():
    assert point_add(E_68, point_add(E_68, P, Q), T) == point_add(E_68, P, point_add(E_68, Q, T))
    assert point_add(E_68, P, Q) == point_add(E_68, Q, P)
    assert point_add(E_68, P, point_negate(E_68, P)) == INFINITY
    assert point_add(E_68, P, INFINITY) == P
    assert is_on_curve(E_68, point_multiply(E_68, P, 3))
    assert point_multiply(E_68, P, -1) == point_negate(E_68, P)
    assert point_multiply(E_68, P, 0) == INFINITY


def test_group_law_on_long_model():
    R = RationalPoint(-1, 0)
    assert is_on_curve(E15_MINIMAL, R)
    assert point_order(E15_MINIMAL, R) is not None


def test_points_off_curve_rejected():
    with pytest.raises(PointNotOnCurve):
        point_add(E_68, RationalPoint(1, 1), P)


def test_orders():
    assert point_order(E_68, T) == 2
    assert point_multiply(E_68, T, 2) == INFINITY
    assert plausibly_infinite_order(E_68, P)
    assert plausibly_infinite_order(E_68, Q)
    assert not plausibly_infinite_order(E_68, T)


def test_torsion_of_e15():
    E = twist15(1)
    assert torsion_subgroup(E) == [2, 4]
    points = torsion_points(E)
    assert len(points) == 8
    assert all(point_order(E, R) in (1, 2, 4) for R in points)


def test_torsion_needs_short_model():
    with pytest.raises(ValueError):
        torsion_points(E15_MINIMAL)


def test_point_counts_of_minimal_model():
    assert count_points_mod_p(E15_MINIMAL, 2) == 4
    assert count_points_mod_p(E15_MINIMAL, 3) == 5
    assert a_p_table(E15_MINIMAL, [2, 3, 5]) == {2: -1, 3: -1, 5: 1}


@pytest.mark.parametrize("p", [3, 7, 11, 13, 101])
def test_counting_methods_agree(p):
    for curve in (E15_MINIMAL, twist15(-8), twist14(-3)):
        assert (count_points_mod_p(curve, p, method="enumerate")
                == count_points_mod_p(curve, p, method="character"))


def test_hasse_bound():
    E = twist15(-8)
    for p in primerange(2, 500):
        assert satisfies_hasse(a_p(E, p), p), p


def test_counting_rejects_bad_primes():
    with pytest.raises(NotPrime):
        count_points_mod_p(E15_MINIMAL, 4)
    with pytest.raises(PrimeBoundExceeded):
        count_points_mod_p(E15_MINIMAL, 10007)
    with pytest.raises(ValueError):
        count_points_mod_p(E15_MINIMAL, 7, method="magic")


def test_group_law_associative_on_torsion():
    E = twist15(1)
    points = torsion_points(E)
    for R in points:
        for S in points:
            for U in points:
                assert point_add(E, point_add(E, R, S), U) == point_add(E, R, point_add(E, S, U))


@pytest.mark.parametrize("D", [-8, -23, -68])
def test_twist_relation(D):
    for p in primerange(7, 200):
        assert a_p(twist15(D), p) == kronecker(D, p) * a_p(E15_MINIMAL, p), p
