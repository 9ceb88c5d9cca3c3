#!/usr/bin/env python3
"""
Tests for binary quadratic forms, class numbers and genus characters.
"""

from fractions import Fraction
from math import gcd

import pytest

from onan_moonshine.errors import (
    NoSquareRoot,
    NotADiscriminant,
    NotPositiveDefinite,
    NotUnimodular,
)
from onan_moonshine.forms import (
    QuadForm,
    apply_sl2,
    class_number,
    enumerate_reduced,
    genus_char,
    hurwitz_number,
    is_fundamental,
    kronecker,
    level_class_count,
    level_reps,
    reduce,
    square_roots_mod,
    stabilizer_weight,
    tau_of,
)


# Class numbers of imaginary quadratic fields
KNOWN_CLASS_NUMBERS = {
    -3: 1, -4: 1, -7: 1, -8: 1, -11: 1, -15: 2, -19: 1, -20: 2, -23: 3,
    -24: 2, -31: 3, -35: 2, -39: 4, -40: 2, -43: 1, -47: 5, -51: 2, -52: 2,
    -55: 4, -56: 4, -59: 3, -67: 1, -68: 4, -71: 7, -79: 5, -83: 3, -84: 4,
    -87: 6, -88: 2, -91: 2, -95: 8,
}


def _class_number_by_reduction(D, bound=40):
    """Distinct primitive classes among all forms with |B| <= A <= bound, found with reduce()."""
    classes = set()
    for a in range(1, bound + 1):
        for b in range(-a, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if gcd(gcd(a, b), c) == 1:
                classes.add(reduce(QuadForm(a, b, c)))
    return len(classes)


def test_form_basics():
    q = QuadForm(3, 2, 6)
    assert q.disc == -68
    assert q(1, 1) == 11
    assert q.is_primitive()
    assert q.is_positive_definite()
    assert q.is_reduced()
    assert str(q) == "(3,2,6)"
    assert QuadForm(2, 2, 2).content == 2


def test_sl2_action_preserves_discriminant():
    q = apply_sl2(QuadForm(1, 0, 17), 1, 1, 0, 1)
    assert q == QuadForm(1, 2, 18)
    assert q.disc == -68
    q = apply_sl2(QuadForm(3, 2, 6), 2, 1, 1, 1)
    assert q.disc == -68


def test_sl2_action_rejects_determinant():
    with pytest.raises(NotUnimodular):
        apply_sl2(QuadForm(1, 0, 1), 2, 0, 0, 1)


@pytest.mark.parametrize("form,reduced", [
    (QuadForm(1, 2, 18), QuadForm(1, 0, 17)),
    (QuadForm(6, 2, 3), QuadForm(3, -2, 6)),
    (QuadForm(9, -2, 2), QuadForm(2, 2, 9)),
    (QuadForm(2, -2, 2), QuadForm(2, 2, 2)),
    (QuadForm(3, 2, 1), QuadForm(1, 0, 2)),
])
def test_reduction(form, reduced):
    assert reduce(form) == reduced
    assert reduce(reduced) == reduced


def test_reduction_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        reduce(QuadForm(1, 3, 1))


def test_reduced_forms_of_minus_68():
    classes = enumerate_reduced(-68)
    assert [q.as_tuple() for q in classes.reps] == [(1, 0, 17), (2, 2, 9), (3, -2, 6), (3, 2, 6)]
    assert class_number(-68) == 4
    assert class_number(-8) == 1


@pytest.mark.parametrize("D,h", sorted(KNOWN_CLASS_NUMBERS.items()))
def test_class_numbers(D, h):
    assert class_number(D) == h


def test_class_number_matches_reduction_of_all_small_forms():
    for n in range(3, 401):
        D = -n
        if D % 4 in (0, 1):
            assert class_number(D) == _class_number_by_reduction(D), D


def test_hurwitz_numbers():
    assert hurwitz_number(-3) == Fraction(1, 3)
    assert hurwitz_number(-4) == Fraction(1, 2)
    assert hurwitz_number(-12) == Fraction(4, 3)
    assert hurwitz_number(-16) == Fraction(3, 2)
    assert hurwitz_number(-68) == 4


def test_stabilizer_weights():
    assert stabilizer_weight(QuadForm(1, 1, 1)) == Fraction(1, 3)
    assert stabilizer_weight(QuadForm(2, 2, 2)) == Fraction(1, 3)
    assert stabilizer_weight(QuadForm(1, 0, 1)) == Fraction(1, 2)
    assert stabilizer_weight(QuadForm(1, 0, 17)) == 1


def test_non_discriminant_rejected():
    with pytest.raises(NotADiscriminant):
        enumerate_reduced(-5)
    with pytest.raises(NotADiscriminant):
        enumerate_reduced(8)


@pytest.mark.parametrize("D,expected", [
    (-3, True), (-4, True), (-8, True), (-68, True), (-15, True),
    (-12, False), (-16, False), (-27, False), (-53, False), (-92, False),
])
def test_fundamental_discriminants(D, expected):
    assert is_fundamental(D) == expected


@pytest.mark.parametrize("a,n,expected", [
    (-8, 3, 1), (-4, 3, -1), (5, 2, -1), (-15, 2, 1), (-68, 5, -1),
    (-8, -15, 1), (-68, -15, 1), (2, 4, 0), (7, 0, 0), (-1, 0, 1),
])
def test_kronecker(a, n, expected):
    assert kronecker(a, n) == expected


def test_genus_characters_of_minus_68():
    chi = {q.as_tuple(): genus_char(q, -4) for q in enumerate_reduced(-68).reps}
    assert chi == {(1, 0, 17): 1, (2, 2, 9): 1, (3, -2, 6): -1, (3, 2, 6): -1}
    assert genus_char(QuadForm(3, 2, 6), 17) == -1


def test_genus_character_needs_splitting():
    with pytest.raises(NotADiscriminant):
        genus_char(QuadForm(1, 0, 17), 5)
    with pytest.raises(NotADiscriminant):
        genus_char(QuadForm(1, 0, 17), -8)


def test_cm_point():
    tau = tau_of(QuadForm(3, 2, 6))
    assert tau.real == Fraction(-1, 3)
    assert tau.imag_squared == Fraction(68, 36)
    assert str(tau) == "(-2+sqrt(-68))/6"


def test_square_roots_mod():
    assert square_roots_mod(-68, 3) == [2, 4]
    assert square_roots_mod(-11, 3) == [1, 5]
    assert square_roots_mod(-7, 3) == []


def test_level_representatives():
    reps = level_reps(3, -8)
    assert [(x.form.as_tuple(), x.residue) for x in reps] == [((3, 2, 1), 2), ((3, -2, 1), 4)]
    reps = level_reps(3, -68)
    assert len(reps) == 8
    for rep in reps:
        assert rep.form.A % 3 == 0
        assert (rep.form.B - rep.residue) % 6 == 0
        assert rep.form.disc == -68
    lifted = {rep.lifted for rep in reps if rep.residue == 2}
    assert lifted == set(enumerate_reduced(-68).reps)


def test_level_class_counts():
    assert level_class_count(1, -8) == 1
    assert level_class_count(3, -8) == 2
    assert level_class_count(3, -23) == 6
    assert level_class_count(3, -7) == 0
    with pytest.raises(NoSquareRoot):
        level_reps(3, -7)


def test_level_reps_need_fundamental():
    with pytest.raises(NotADiscriminant):
        level_reps(3, -12 * 4)
