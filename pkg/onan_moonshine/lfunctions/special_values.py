"""
Central Values of Weight 2 L-Functions

For a weight 2 newform f of level N whose completed L-function has
functional equation sign eps, folding the Mellin integral with the Fricke
involution gives

    L_f(1) = (1 + eps) * sum_{n >= 1} (a_n / n) exp(-2 pi n / sqrt(N)).

With |a_n| <= 2n the tail after M terms is at most
(1 + eps) * 2 x^(M+1) / (1 - x), x = exp(-2 pi / sqrt(N)).

Quadratic twists by a fundamental D prime to N use a_n (D/n), level N D^2
and sign (D/-N) eps.
"""

from dataclasses import dataclass, asdict
from math import exp, gcd, log, pi, sqrt
from typing import Dict, List, Optional, Sequence
import logging

import numpy as np
from sympy import primerange

from ..errors import CrossCheckFailed, InsufficientCoefficients
from ..forms.characters import kronecker
from ..modular.named_series import F15_ETA, f15_series
from ..curves.counting import a_p
from ..curves.weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)

F15_LEVEL = 15
# w15 = -1, so the weight 2 sign is -w15 = +1
F15_SIGN = 1
DEFAULT_L_TOLERANCE = 1e-8


@dataclass
class LValueReport:
    """
    Numerical L(1) with the truncation data used to get it.

    Attributes:
        value: L(1)
        terms_used: Number of Dirichlet coefficients summed
        sign: Functional equation sign
        tail_estimate: Bound on the discarded tail
        level: Conductor used in the exponential weights
    """
    value: float
    terms_used: int
    sign: int
    tail_estimate: float
    level: int

    def is_certified_nonzero(self, safety_factor: float = 10.0) -> bool:
        return abs(self.value) > safety_factor * self.tail_estimate

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass(frozen=True)
class ModularityRow:
    """a_E(p) against a_f(p) at one prime."""
    p: int
    a_curve: int
    a_form: int
    match: bool
    bad: bool


def eta_product_coefficients(exponents: Dict[int, int], n_max: int) -> np.ndarray:
    """
    Coefficients a_0 .. a_n_max of prod eta(m tau)^e_m with nonnegative
    integer exponents whose leading exponent sum(m e_m)/24 is an integer.

    Each factor prod (1 - q^(mk)) comes from Euler's pentagonal numbers;
    the factors are multiplied by truncated numpy convolution.

    Example:
        >>> eta_product_coefficients({1: 1, 3: 1, 5: 1, 15: 1}, 4).tolist()
        [0, 1, -1, -1, -1]
    """
    weight = sum(m * e for m, e in exponents.items())
    if weight % 24 or any(e < 0 for e in exponents.values()):
        raise ValueError(f"Need nonnegative exponents with sum(m e) divisible by 24, got {exponents}")
    shift = weight // 24
    length = n_max - shift + 1
    if length <= 0:
        return np.zeros(n_max + 1, dtype=np.int64)

    product = np.zeros(length, dtype=np.int64)
    product[0] = 1
    for m, e in exponents.items():
        factor = np.zeros(length, dtype=np.int64)
        k = 0
        while True:
            hit = False
            for j in ((k, -k) if k else (0,)):
                exponent = m * j * (3 * j - 1) // 2
                if exponent < length:
                    factor[exponent] += -1 if j % 2 else 1
                    hit = True
            if not hit:
                break
            k += 1
        for _ in range(e):
            product = np.convolve(product, factor)[:length]

    coefficients = np.zeros(n_max + 1, dtype=np.int64)
    coefficients[shift:] = product
    return coefficients


def a_coeffs(n_max: int, cross_check: bool = False) -> List[int]:
    """
    a_0 .. a_n_max of f15 (a_0 = 0).

    Args:
        n_max: Largest index
        cross_check: Compare the first terms against the exact eta product

    Example:
        >>> a_coeffs(6)[1:]
        [1, -1, -1, -1, 1, 1]
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    coefficients = eta_product_coefficients(F15_ETA, n_max).tolist()
    if cross_check:
        check_to = min(n_max, 40)
        exact = f15_series(max(check_to + 1, 5)).series
        for n in range(1, check_to + 1):
            if exact.coefficient(n) != coefficients[n]:
                raise CrossCheckFailed(
                    f"f15 coefficient {n}: convolution {coefficients[n]}, series {exact.coefficient(n)}"
                )
    return coefficients


def terms_needed(level: int, tol: float) -> int:
    """Smallest M with 4 x^(M+1) / (1 - x) < tol, x = exp(-2 pi / sqrt(level))."""
    x = exp(-2 * pi / sqrt(level))
    return max(int((log(tol * (1 - x) / 4)) / log(x)), 1)


def l_value_at_1(
    coeffs: Sequence[int],
    N: int,
    sign: int,
    tol: float = DEFAULT_L_TOLERANCE
) -> LValueReport:
    """
    L(1) by the folded exponential sum.

    Args:
        coeffs: coeffs[n] = a_n (coeffs[0] ignored)
        N: Level
        sign: Functional equation sign, +1 or -1
        tol: Target bound on the tail

    Raises:
        InsufficientCoefficients: If more coefficients are needed for tol

    Example:
        >>> round(l_value_at_1(a_coeffs(200), 15, 1).value, 6)
        0.350151
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign == -1:
        return LValueReport(0.0, 0, sign, 0.0, N)
    M = terms_needed(N, tol)
    if M >= len(coeffs):
        raise InsufficientCoefficients(
            f"Level {N} needs {M} coefficients for tol {tol}, got {len(coeffs) - 1}"
        )
    x = exp(-2 * pi / sqrt(N))
    n = np.arange(1, M + 1, dtype=np.float64)
    a = np.asarray(coeffs[1:M + 1], dtype=np.float64)
    value = 2 * float(np.sum(a / n * x ** n))
    tail = 4 * x ** (M + 1) / (1 - x)
    return LValueReport(value, M, sign, tail, N)


def twist_sign(D: int, sign: int = F15_SIGN, level: int = F15_LEVEL) -> int:
    """(D / -N) times the untwisted sign."""
    return kronecker(D, -level) * sign


def twisted_coefficients(coeffs: Sequence[int], D: int) -> List[int]:
    return [0] + [c * kronecker(D, n) for n, c in enumerate(coeffs) if n > 0]


def twisted_l_value(
    D: int,
    tol: float = DEFAULT_L_TOLERANCE,
    sign_override: Optional[int] = None
) -> LValueReport:
    """
    L(E15 (x) D, 1) from the twisted coefficients of f15.

    Args:
        D: Fundamental discriminant prime to 15
        tol: Target bound on the tail
        sign_override: Force the functional equation sign

    Example:
        >>> abs(twisted_l_value(-68).value) < 1e-4
        True
    """
    if gcd(D, F15_LEVEL) != 1:
        raise ValueError(f"Twist {D} must be prime to {F15_LEVEL}")
    level = F15_LEVEL * D * D
    sign = twist_sign(D) if sign_override is None else sign_override
    M = terms_needed(level, tol)
    coeffs = twisted_coefficients(a_coeffs(M + 1), D)
    report = l_value_at_1(coeffs, level, sign, tol)
    logger.debug("L(E15 x %d, 1) = %.12f (sign %+d, %d terms)", D, report.value, sign, report.terms_used)
    return report


def modularity_check(
    curve: WeierstrassCurve,
    coeffs: Sequence[int],
    p_max: int,
    level: int = F15_LEVEL
) -> List[ModularityRow]:
    """
    Compare a_E(p) from point counts with a_f(p) for p <= p_max.

    Primes dividing the level are flagged as bad; a mismatch there is
    logged, not treated as failure.
    """
    if len(coeffs) <= p_max:
        raise InsufficientCoefficients(f"Need coefficients up to {p_max}, got {len(coeffs) - 1}")
    rows = []
    for p in primerange(2, p_max + 1):
        a_curve = a_p(curve, p)
        a_form = int(coeffs[p])
        bad = level % p == 0
        row = ModularityRow(p, a_curve, a_form, a_curve == a_form, bad)
        if bad and not row.match:
            logger.warning("a_E(%d) = %d differs from a_f(%d) = %d at a bad prime", p, a_curve, p, a_form)
        rows.append(row)
    return rows
