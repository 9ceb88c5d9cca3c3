"""
Point Counting over Prime Fields

#E(F_p) for the reduction of a long Weierstrass model, by full
enumeration of the affine plane or by the quadratic character sum
p + 1 + sum_x chi(delta(x)) with delta(x) = (a1 x + a3)^2 + 4(x^3 + a2 x^2 + a4 x + a6).
Both are vectorized with numpy.
"""

from typing import Dict, Iterable, Literal
import logging

import numpy as np
from sympy import isprime

from ..errors import NotPrime, PrimeBoundExceeded
from .weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)

CountMethod = Literal["auto", "enumerate", "character"]

DEFAULT_PRIME_BOUND = 10000
DEFAULT_ENUMERATION_CUTOFF = 3


def _reduced_coefficients(curve: WeierstrassCurve, p: int):
    return [c % p for c in curve.coefficients]


def _count_by_enumeration(curve: WeierstrassCurve, p: int) -> int:
    a1, a2, a3, a4, a6 = _reduced_coefficients(curve, p)
    x = np.arange(p, dtype=np.int64).reshape(-1, 1)
    y = np.arange(p, dtype=np.int64).reshape(1, -1)
    lhs = (y * y + a1 * x * y + a3 * y) % p
    rhs = (((x * x) % p) * x + a2 * x * x + a4 * x + a6) % p
    return int(np.count_nonzero(lhs == rhs)) + 1


def legendre_table(p: int) -> np.ndarray:
    """chi(v) for v in [0, p): 0 at 0, 1 on nonzero squares, -1 elsewhere."""
    table = -np.ones(p, dtype=np.int64)
    table[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    table[0] = 0
    return table


def _count_by_character(curve: WeierstrassCurve, p: int) -> int:
    a1, a2, a3, a4, a6 = _reduced_coefficients(curve, p)
    x = np.arange(p, dtype=np.int64)
    cubic = ((((x * x) % p) * x) % p + a2 * ((x * x) % p) + a4 * x + a6) % p
    linear = (a1 * x + a3) % p
    delta = (linear * linear + 4 * cubic) % p
    return p + 1 + int(legendre_table(p)[delta].sum())


def count_points_mod_p(
    curve: WeierstrassCurve,
    p: int,
    method: CountMethod = "auto",
    prime_bound: int = DEFAULT_PRIME_BOUND,
    enumeration_cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> int:
    """
    Number of projective points on the reduction of curve mod p.

    The model is used as given; pass a minimal model at primes where the
    given one has bad reduction for the wrong reason.

    Args:
        curve: Weierstrass model
        p: Prime
        method: "enumerate", "character", or "auto" (enumeration up to the cutoff)
        prime_bound: Largest prime accepted
        enumeration_cutoff: Largest prime counted by enumeration under "auto"

    Raises:
        NotPrime: If p is not prime
        PrimeBoundExceeded: If p exceeds prime_bound

    Example:
        >>> from .weierstrass import E15_MINIMAL
        >>> count_points_mod_p(E15_MINIMAL, 2), count_points_mod_p(E15_MINIMAL, 3)
        (4, 5)
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p > prime_bound:
        raise PrimeBoundExceeded(f"p = {p} exceeds the point counting bound {prime_bound}")
    if method == "auto":
        method = "enumerate" if p <= enumeration_cutoff else "character"
    if method == "character" and p == 2:
        method = "enumerate"
    if method == "enumerate":
        return _count_by_enumeration(curve, p)
    if method == "character":
        return _count_by_character(curve, p)
    raise ValueError(f"Unknown counting method '{method}'")


def a_p(curve: WeierstrassCurve, p: int, **kwargs) -> int:
    """
    a_E(p) = p + 1 - #E(F_p).

    At primes of bad reduction the same formula gives 0 (additive) or
    +-1 (multiplicative).
    """
    return p + 1 - count_points_mod_p(curve, p, **kwargs)


def a_p_table(curve: WeierstrassCurve, primes: Iterable[int], **kwargs) -> Dict[int, int]:
    return {p: a_p(curve, p, **kwargs) for p in primes}


def satisfies_hasse(a: int, p: int) -> bool:
    """|a| <= 2 sqrt(p)."""
    return a * a <= 4 * p
