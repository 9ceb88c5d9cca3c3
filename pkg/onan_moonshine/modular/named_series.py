"""
Named q-Expansions

Exact expansions of the modular functions and forms the package works
with: the j-invariant, the normalized principal moduli T3 and T6, the
O'Nan functions f^ON and f^ON_3A, the weight 2 newform f15 and the Hurwitz
class number generating function.

Every builder takes an absolute precision: coefficients of q^e are known
for e < prec. Results are cached, since FracSeries values are immutable.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Literal, Tuple, get_args
import logging

from ..errors import CrossCheckFailed
from ..forms.classes import hurwitz_number
from ..series import FracSeries, eta_quotient, theta_r

logger = logging.getLogger(__name__)

SeriesId = Literal["J", "T3", "T6", "FON", "FON3A", "F15", "HURWITZ", "THETA0", "THETA1"]
SERIES_IDS: Tuple[str, ...] = get_args(SeriesId)

# Eta exponents {m: e_m} for prod eta(m tau)^e_m
T3_ETA = {1: 12, 3: -12}
T6_ETA = {1: 5, 3: 1, 2: -1, 6: -5}
F15_ETA = {1: 1, 3: 1, 5: 1, 15: 1}

# f^ON = 1/2 j^2 - 1489/2 j + 80256
FON_POLY = (80256, Fraction(-1489, 2), Fraction(1, 2))
# f^ON_3A = 1/2 T3^2 - 1/2 T3 - 54
FON3A_POLY = (-54, Fraction(-1, 2), Fraction(1, 2))

KNOWN_COEFFICIENTS: Dict[str, Dict[Fraction, Fraction]] = {
    "J": {-1: 1, 0: 744, 1: 196884, 2: 21493760, 3: 864299970},
    "T3": {-1: 1, 0: 0, 1: 54, 2: -76, 3: -243},
    "T6": {-1: 1, 0: 0},
    "FON": {-2: Fraction(1, 2), -1: Fraction(-1, 2), 0: 0},
    "FON3A": {-2: Fraction(1, 2), -1: Fraction(-1, 2), 0: 0},
    "F15": {1: 1, 2: -1, 3: -1, 4: -1},
    "HURWITZ": {0: Fraction(-1, 12), 1: 0, 2: 0, 3: Fraction(1, 3), 4: Fraction(1, 2),
                7: 1, 8: 1},
}


@dataclass(frozen=True)
class NamedSeries:
    """
    A q-expansion together with the group it is modular for.

    Attributes:
        id: Series identifier
        series: Exact expansion
        level: N such that the function lives on Gamma0(N)
        weight: Modular weight
    """
    id: str
    series: FracSeries
    level: int
    weight: Fraction

    def coefficient(self, exponent) -> Fraction:
        return self.series.coefficient(exponent)

    def __str__(self) -> str:
        return str(self.series)


def _check_known(series_id: str, series: FracSeries) -> None:
    """Compare against the attested leading coefficients inside the known window."""
    for e, expected in KNOWN_COEFFICIENTS.get(series_id, {}).items():
        if Fraction(e) >= series.precision:
            continue
        actual = series.coefficient(e)
        if actual != expected:
            raise CrossCheckFailed(
                f"{series_id}: coefficient of q^{e} is {actual}, expected {expected}"
            )


def _named(series_id: str, series: FracSeries, level: int, weight) -> NamedSeries:
    _check_known(series_id, series)
    return NamedSeries(series_id, series, level, Fraction(weight))


def _require(prec: int, minimum: int, name: str) -> None:
    if prec < minimum:
        raise ValueError(f"{name} needs prec >= {minimum}, got {prec}")


@lru_cache(maxsize=None)
def j_series(prec: int) -> NamedSeries:
    """
    Klein j-invariant from its eta-quotient formula.

    j = eta(t)^24/eta(2t)^24 + 4096 eta(t)^24/eta(t/2)^24
        - 4096 eta(t/2)^24 eta(2t)^24/eta(t)^48 + 768

    The half-integral exponents of the middle terms cancel.

    Example:
        >>> str(j_series(2))
        'q^-1 + 744 + 196884 q + O(q^2)'
    """
    _require(prec, 2, "j_series")
    window = prec + 1
    half = Fraction(1, 2)
    series = (
        eta_quotient({1: 24, 2: -24}, window)
        + eta_quotient({1: 24, half: -24}, window) * 4096
        - eta_quotient({half: 24, 2: 24, 1: -48}, window) * 4096
        + 768
    ).truncate(prec).normalize()
    return _named("J", series, 1, 0)


@lru_cache(maxsize=None)
def t3_series(prec: int) -> NamedSeries:
    """T3 = eta(t)^12/eta(3t)^12 + 12, the normalized principal modulus for Gamma0(3)."""
    _require(prec, 2, "t3_series")
    series = (eta_quotient(T3_ETA, prec + 1) + 12).truncate(prec)
    return _named("T3", series, 3, 0)


@lru_cache(maxsize=None)
def t6_series(prec: int) -> NamedSeries:
    """T6 = eta(t)^5 eta(3t)/(eta(2t) eta(6t)^5) + 5, normalized for Gamma0(6)."""
    _require(prec, 2, "t6_series")
    series = (eta_quotient(T6_ETA, prec + 1) + 5).truncate(prec)
    return _named("T6", series, 6, 0)


def _quadratic_in(base: FracSeries, poly: Tuple, prec: int) -> FracSeries:
    return base.compose_polynomial(poly).truncate(prec)


@lru_cache(maxsize=None)
def fon_series(prec: int) -> NamedSeries:
    """
    f^ON = 1/2 j^2 - 1489/2 j + 80256 = 1/2 q^-2 - 1/2 q^-1 + O(q).
    """
    _require(prec, 3, "fon_series")
    j = j_series(prec + 1).series
    return _named("FON", _quadratic_in(j, FON_POLY, prec), 1, 0)


@lru_cache(maxsize=None)
def fon3a_series(prec: int) -> NamedSeries:
    """
    f^ON_3A = 1/2 T3^2 - 1/2 T3 - 54, the Gamma0(3) function bounded at the
    cusp 0 with principal part 1/2 q^-2 - 1/2 q^-1 at infinity.
    """
    _require(prec, 3, "fon3a_series")
    t3 = t3_series(prec + 1).series
    return _named("FON3A", _quadratic_in(t3, FON3A_POLY, prec), 3, 0)


@lru_cache(maxsize=None)
def f15_series(prec: int) -> NamedSeries:
    """f15 = eta(t) eta(3t) eta(5t) eta(15t) = q - q^2 - q^3 - q^4 + ..."""
    _require(prec, 5, "f15_series")
    series = eta_quotient(F15_ETA, prec - 1).truncate(prec)
    return _named("F15", series, 15, 2)


@lru_cache(maxsize=None)
def hurwitz_series(prec: int) -> NamedSeries:
    """
    H = -1/12 + sum_{n > 0} H(n) q^n, from the reduced-form enumerator.

    Example:
        >>> str(hurwitz_series(5))
        '-1/12 + 1/3 q^3 + 1/2 q^4 + O(q^5)'
    """
    _require(prec, 1, "hurwitz_series")
    terms: Dict[int, Fraction] = {0: Fraction(-1, 12)}
    for n in range(3, prec):
        if n % 4 in (0, 3):
            terms[n] = hurwitz_number(-n)
    return _named("HURWITZ", FracSeries.from_terms(terms, prec), 4, Fraction(3, 2))


@lru_cache(maxsize=None)
def theta0_series(prec: int) -> NamedSeries:
    return _named("THETA0", theta_r(0, prec), 4, Fraction(1, 2))


@lru_cache(maxsize=None)
def theta1_series(prec: int) -> NamedSeries:
    return _named("THETA1", theta_r(1, prec), 4, Fraction(1, 2))


BUILDERS: Dict[str, Callable[[int], NamedSeries]] = {
    "J": j_series,
    "T3": t3_series,
    "T6": t6_series,
    "FON": fon_series,
    "FON3A": fon3a_series,
    "F15": f15_series,
    "HURWITZ": hurwitz_series,
    "THETA0": theta0_series,
    "THETA1": theta1_series,
}


def named_series(series_id: str, prec: int) -> NamedSeries:
    """
    Look up a named expansion by identifier.

    Raises:
        ValueError: If the identifier is unknown
    """
    try:
        builder = BUILDERS[series_id.upper()]
    except KeyError:
        raise ValueError(f"Unknown series '{series_id}'. Choose from {', '.join(SERIES_IDS)}")
    logger.debug("Building %s to O(q^%s)", series_id, prec)
    return builder(prec)
