"""
Binary Quadratic Forms

QuadForm is the integer triple (A, B, C) standing for Ax^2 + Bxy + Cy^2.
This module holds the SL2(Z) action, Gauss reduction of positive definite
forms and the exact CM point attached to a form.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

import mpmath

from ..errors import NotPositiveDefinite, NotUnimodular


@dataclass(frozen=True, order=True)
class QuadForm:
    """
    Binary quadratic form Ax^2 + Bxy + Cy^2.

    Example:
        >>> QuadForm(1, 0, 17).disc
        -68
    """
    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def content(self) -> int:
        return gcd(self.A, self.B, self.C)

    def __call__(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y

    def __str__(self) -> str:
        return f"({self.A},{self.B},{self.C})"

    def is_primitive(self) -> bool:
        return self.content == 1

    def is_positive_definite(self) -> bool:
        return self.A > 0 and self.disc < 0

    def is_reduced(self) -> bool:
        """|B| <= A <= C, with B >= 0 when |B| = A or A = C."""
        A, B, C = self.A, self.B, self.C
        if not (abs(B) <= A <= C):
            return False
        if (abs(B) == A or A == C) and B < 0:
            return False
        return True

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.A, self.B, self.C)


@dataclass(frozen=True)
class CMPoint:
    """
    Exact CM point tau = (-B + sqrt(D)) / (2A) in the upper half plane.
    """
    B: int
    A: int
    D: int

    @property
    def real(self) -> Fraction:
        return Fraction(-self.B, 2 * self.A)

    @property
    def imag_squared(self) -> Fraction:
        """Im(tau)^2 = |D| / (4A^2), kept exact."""
        return Fraction(-self.D, 4 * self.A * self.A)

    def to_mpc(self) -> mpmath.mpc:
        """Numerical value at the current mpmath working precision."""
        return mpmath.mpc(
            mpmath.mpf(-self.B) / (2 * self.A),
            mpmath.sqrt(-self.D) / (2 * self.A),
        )

    def __str__(self) -> str:
        return f"({-self.B}+sqrt({self.D}))/{2 * self.A}"


def apply_sl2(form: QuadForm, a: int, b: int, c: int, d: int) -> QuadForm:
    """
    Transform Q(x, y) into Q(ax + by, cx + dy).

    Args:
        form: Quadratic form
        a, b, c, d: Entries of [[a, b], [c, d]] in SL2(Z)

    Returns:
        Equivalent form with the same discriminant

    Raises:
        NotUnimodular: If ad - bc != 1

    Example:
        >>> apply_sl2(QuadForm(1, 0, 17), 1, 1, 0, 1)
        QuadForm(A=1, B=2, C=18)
    """
    if a * d - b * c != 1:
        raise NotUnimodular(f"[[{a}, {b}], [{c}, {d}]] has determinant {a * d - b * c}")
    A, B, C = form.A, form.B, form.C
    return QuadForm(
        A * a * a + B * a * c + C * c * c,
        2 * A * a * b + B * (a * d + b * c) + 2 * C * c * d,
        A * b * b + B * b * d + C * d * d,
    )


def reduce(form: QuadForm) -> QuadForm:
    """
    Gauss reduction to the unique reduced form in the SL2(Z) class.

    Alternates translating B into (-A, A] with the swap
    (A, B, C) -> (C, -B, A) while A > C.

    Raises:
        NotPositiveDefinite: If A <= 0 or disc >= 0
    """
    if not form.is_positive_definite():
        raise NotPositiveDefinite(f"Cannot reduce {form}: need A > 0 and disc < 0")
    A, B, C = form.as_tuple()
    while True:
        if not (-A < B <= A):
            k = (A - B) // (2 * A)
            C = A * k * k + B * k + C
            B = B + 2 * A * k
        if A > C:
            A, B, C = C, -B, A
            continue
        break
    if A == C and B < 0:
        B = -B
    return QuadForm(A, B, C)


def tau_of(form: QuadForm) -> CMPoint:
    """
    Upper half plane root of Q(x, 1) = 0.

    Raises:
        NotPositiveDefinite: If the form is not positive definite
    """
    if not form.is_positive_definite():
        raise NotPositiveDefinite(f"{form} has no CM point: need A > 0 and disc < 0")
    return CMPoint(form.B, form.A, form.disc)
