"""
Weierstrass Models over Q

Long models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with their
b-invariants, discriminant and j-invariant, the twist families
E15 (x) D and E14 (x) D, and an exact check of a change of variables
against a claimed minimal model.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple
import logging

from sympy import Rational, expand, symbols

from ..errors import SingularCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeierstrassCurve:
    """
    Weierstrass model with integer coefficients.

    Short models y^2 = x^3 + Ax + B are stored with a1 = a2 = a3 = 0.

    Example:
        >>> WeierstrassCurve(1, 1, 1, -10, -10).discriminant
        50625
    """
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.discriminant == 0:
            raise SingularCurve(f"{self} has zero discriminant")

    @classmethod
    def short(cls, A: int, B: int) -> "WeierstrassCurve":
        return cls(0, 0, 0, A, B)

    @property
    def is_short(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    # b-invariants
    @property
    def b2(self) -> int:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> int:
        return self.a1 * self.a3 + 2 * self.a4

    @property
    def b6(self) -> int:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> int:
        a1, a2, a3, a4, a6 = self.coefficients
        return a1 * a1 * a6 - a1 * a3 * a4 + 4 * a2 * a6 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> int:
        return self.b2 ** 2 - 24 * self.b4

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self) -> str:
        if self.is_short:
            return f"y^2 = x^3 + ({self.a4})x + ({self.a6})"
        return "[{}, {}, {}, {}, {}]".format(*self.coefficients)


def discriminant(curve: WeierstrassCurve) -> int:
    return curve.discriminant


def j_invariant(curve: WeierstrassCurve) -> Fraction:
    """
    j = c4^3 / Delta; for a short model this is 1728 * 4A^3 / (4A^3 + 27B^2).

    Example:
        >>> j_invariant(twist15(-8))
        Fraction(111284641, 50625)
    """
    return Fraction(curve.c4 ** 3, curve.discriminant)


def twist15(D: int) -> WeierstrassCurve:
    """E15 (x) D: y^2 = x^3 - 12987 D^2 x - 263466 D^3."""
    if D == 0:
        raise ValueError("Twist parameter must be nonzero")
    return WeierstrassCurve.short(-12987 * D * D, -263466 * D ** 3)


def twist14(D: int) -> WeierstrassCurve:
    """E14 (x) D: y^2 = x^3 + 5805 D^2 x - 285714 D^3."""
    if D == 0:
        raise ValueError("Twist parameter must be nonzero")
    return WeierstrassCurve.short(5805 * D * D, -285714 * D ** 3)


# E15 reduced global minimal model and the substitution reaching it
E15_MINIMAL = WeierstrassCurve(1, 1, 1, -10, -10)
E15_X_SUBSTITUTION = (36, 0, 15)       # x -> 36x + 15
E15_Y_SUBSTITUTION = (108, 216, 108)   # y -> 108x + 216y + 108
E15_DIVISOR = 46656


def verify_minimal_substitution(
    curve: WeierstrassCurve,
    minimal: WeierstrassCurve,
    x_sub: Tuple[int, int, int],
    y_sub: Tuple[int, int, int],
    divisor: int
) -> bool:
    """
    Check that substituting into curve and dividing gives minimal exactly.

    Args:
        curve: Source model
        minimal: Claimed model after the change of variables
        x_sub: (p, q, c) meaning x -> p x + q y + c
        y_sub: (p, q, c) meaning y -> p x + q y + c
        divisor: Constant the substituted equation is divided by

    Returns:
        True iff the two equations agree as polynomials in x and y

    Example:
        >>> verify_minimal_substitution(twist15(1), E15_MINIMAL,
        ...     E15_X_SUBSTITUTION, E15_Y_SUBSTITUTION, E15_DIVISOR)
        True
    """
    x, y = symbols("x y")

    def equation(E: WeierstrassCurve, X, Y):
        a1, a2, a3, a4, a6 = E.coefficients
        return Y ** 2 + a1 * X * Y + a3 * Y - (X ** 3 + a2 * X ** 2 + a4 * X + a6)

    X = x_sub[0] * x + x_sub[1] * y + x_sub[2]
    Y = y_sub[0] * x + y_sub[1] * y + y_sub[2]
    substituted = equation(curve, X, Y) * Rational(1, divisor)
    difference = expand(substituted - equation(minimal, x, y))
    logger.debug("Substitution residual for %s -> %s: %s", curve, minimal, difference)
    return difference == 0
