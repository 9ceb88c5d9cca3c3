"""
Rational Points and Torsion

Exact chord-tangent arithmetic on long Weierstrass models, point orders
bounded by the torsion cap, and a Nagell-Lutz search for the torsion
subgroup of a short model.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Union
import logging

import numpy as np
from sympy import divisors

from ..errors import PointNotOnCurve
from .weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)

DEFAULT_TORSION_CAP = 12

Number = Union[int, Fraction]


@dataclass(frozen=True)
class RationalPoint:
    """
    Point of E(Q): affine (x, y) or the point at infinity.

    Example:
        >>> RationalPoint(852, 179712).is_infinity
        False
    """
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("Both coordinates must be given, or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def infinity(cls) -> "RationalPoint":
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = RationalPoint.infinity()


def is_on_curve(curve: WeierstrassCurve, P: RationalPoint) -> bool:
    """
    Exact check of the curve equation.

    Example:
        >>> from .weierstrass import twist15
        >>> is_on_curve(twist15(-68), RationalPoint(852, 179712))
        True
    """
    if P.is_infinity:
        return True
    a1, a2, a3, a4, a6 = curve.coefficients
    x, y = P.x, P.y
    return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6


def _require(curve: WeierstrassCurve, *points: RationalPoint) -> None:
    for P in points:
        if not is_on_curve(curve, P):
            raise PointNotOnCurve(f"{P} is not on {curve}")


def point_negate(curve: WeierstrassCurve, P: RationalPoint) -> RationalPoint:
    """-(x, y) = (x, -y - a1 x - a3)."""
    _require(curve, P)
    if P.is_infinity:
        return P
    return RationalPoint(P.x, -P.y - curve.a1 * P.x - curve.a3)


def point_add(curve: WeierstrassCurve, P: RationalPoint, Q: RationalPoint) -> RationalPoint:
    """
    Chord-tangent sum P + Q.

    Raises:
        PointNotOnCurve: If P or Q is not on the curve
    """
    _require(curve, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = curve.coefficients
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return INFINITY
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        nu = (-x1 ** 3 + a4 * x1 + 2 * a6 - a3 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return RationalPoint(x3, y3)


def point_multiply(curve: WeierstrassCurve, P: RationalPoint, n: int) -> RationalPoint:
    """n P by double-and-add; negative n uses -P."""
    if n < 0:
        return point_multiply(curve, point_negate(curve, P), -n)
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = point_add(curve, result, addend)
        n >>= 1
        if n:
            addend = point_add(curve, addend, addend)
    return result


def point_order(curve: WeierstrassCurve, P: RationalPoint, cap: int = DEFAULT_TORSION_CAP) -> Optional[int]:
    """Order of P if it is at most cap, else None."""
    Q = P
    for n in range(1, cap + 1):
        if Q.is_infinity:
            return n
        Q = point_add(curve, Q, P)
    return None


def plausibly_infinite_order(
    curve: WeierstrassCurve,
    P: RationalPoint,
    cap: int = DEFAULT_TORSION_CAP
) -> bool:
    """
    True when no multiple nP with n <= cap is the identity.

    Rational torsion orders are at most 12, so this rules torsion out; it
    says nothing about independence of several points.
    """
    return point_order(curve, P, cap) is None


def _integer_roots_of_cubic(A: int, B: int, c: int) -> List[int]:
    """Integer x with x^3 + A x + B = c, located with numpy and confirmed exactly."""
    roots = np.roots([1, 0, A, B - c])
    found = set()
    for root in roots:
        if abs(root.imag) > 1e-6 * max(1.0, abs(root.real)):
            continue
        guess = int(round(root.real))
        for x in (guess - 1, guess, guess + 1):
            if x ** 3 + A * x + B == c:
                found.add(x)
    return sorted(found)


def torsion_points(curve: WeierstrassCurve, cap: int = DEFAULT_TORSION_CAP) -> List[RationalPoint]:
    """
    Torsion points of a short integral model via Nagell-Lutz:
    y = 0 or y^2 divides 4A^3 + 27B^2, validated by exact order <= cap.
    """
    if not curve.is_short:
        raise ValueError("Nagell-Lutz search needs a short model y^2 = x^3 + Ax + B")
    A, B = curve.a4, curve.a6
    disc = abs(4 * A ** 3 + 27 * B * B)
    candidates_y = [0] + [d for d in divisors(disc) if isqrt(d) ** 2 == d]
    points = [INFINITY]
    for y2 in candidates_y:
        y = isqrt(y2)
        for x in _integer_roots_of_cubic(A, B, y2):
            for sign in ((1,) if y == 0 else (1, -1)):
                P = RationalPoint(x, sign * y)
                if point_order(curve, P, cap) is not None:
                    points.append(P)
    logger.debug("Torsion search on %s: %d points", curve, len(points))
    return points


def torsion_subgroup(curve: WeierstrassCurve, cap: int = DEFAULT_TORSION_CAP) -> List[int]:
    """
    Torsion structure as cyclic orders: [n] for Z/n, [2, m] for Z/2 x Z/m.

    Example:
        >>> from .weierstrass import twist15
        >>> torsion_subgroup(twist15(1))
        [2, 4]
    """
    points = torsion_points(curve, cap)
    n = len(points)
    two_torsion = [P for P in points if not P.is_infinity and P.y == 0]
    if len(two_torsion) == 3:
        return [2, n // 2]
    return [n]
