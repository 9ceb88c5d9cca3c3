"""
Numerical Values at CM Points

Modular functions are evaluated through their eta-quotient formulas with
the Euler identity eta(t) = sum (12/n) q^(n^2/24). The discarded tail of
each eta sum is bounded by a geometric series, and the bound is carried
through quotients and the fixed polynomials that define f^ON and
f^ON_3A. A value is only rounded to an exact number when the rounding
distance plus the error bound stays under the tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union
import logging

import mpmath

from ..errors import NonConvergent
from ..forms.quadratic_forms import CMPoint
from ..modular.named_series import FON3A_POLY, FON_POLY, T3_ETA, T6_ETA
from ..series.constructors import eta_character

logger = logging.getLogger(__name__)

DEFAULT_DPS = 50
DEFAULT_TOLERANCE = 1e-6
MIN_IMAGINARY_PART = 0.01
MAX_ETA_TERMS = 20000

NUMERIC_IDS = ("J", "T3", "T6", "FON", "FON3A")

J_ETA_TERMS = (
    (1, {1: 24, 2: -24}),
    (4096, {1: 24, Fraction(1, 2): -24}),
    (-4096, {Fraction(1, 2): 24, 2: 24, 1: -48}),
)

TauLike = Union[CMPoint, complex, mpmath.mpc]


@dataclass(frozen=True)
class QuadraticValue:
    """
    Exact value a + b sqrt(D) with a, b in (1/2)Z.

    Example:
        >>> str(QuadraticValue(Fraction(17), Fraction(-8), -11))
        '17 - 8*sqrt(-11)'
    """
    a: Fraction
    b: Fraction
    D: int

    def to_mpc(self) -> mpmath.mpc:
        root = mpmath.sqrt(mpmath.mpc(self.D))
        return mpmath.mpf(self.a.numerator) / self.a.denominator + \
            root * mpmath.mpf(self.b.numerator) / self.b.denominator

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        mag = abs(self.b)
        coeff = "" if mag == 1 else f"{mag}*"
        return f"{self.a} {sign} {coeff}sqrt({self.D})"


@dataclass
class CMValueReport:
    """
    A numerically evaluated value with a rigorous error bound.

    Attributes:
        value: Computed value
        tail_bound: Upper bound on |value - true value|
        rounded: Exact value (int, Fraction or QuadraticValue), present only
                 when |value - rounded| + tail_bound < tolerance
        terms_used: Largest number of eta terms summed
    """
    value: mpmath.mpc
    tail_bound: mpmath.mpf
    rounded: Optional[Union[int, Fraction, QuadraticValue]] = None
    terms_used: int = 0

    @property
    def real(self) -> float:
        return float(mpmath.re(self.value))

    @property
    def imag(self) -> float:
        return float(mpmath.im(self.value))

    def distance_to(self, exact) -> mpmath.mpf:
        return abs(self.value - _exact_to_mpc(exact))

    def to_dict(self) -> Dict:
        return {
            "value_real": mpmath.nstr(mpmath.re(self.value), 20),
            "value_imag": mpmath.nstr(mpmath.im(self.value), 20),
            "tail_bound": mpmath.nstr(self.tail_bound, 5),
            "rounded": None if self.rounded is None else str(self.rounded),
        }


def _exact_to_mpc(exact) -> mpmath.mpc:
    if isinstance(exact, QuadraticValue):
        return exact.to_mpc()
    exact = Fraction(exact)
    return mpmath.mpc(mpmath.mpf(exact.numerator) / exact.denominator)


def as_tau(tau: TauLike) -> mpmath.mpc:
    if isinstance(tau, CMPoint):
        return tau.to_mpc()
    return mpmath.mpc(tau)


def eta_terms_needed(tau: TauLike, tol) -> int:
    """
    Smallest M with x^((M+1)^2) / (1 - x) < tol, where x = |q|^(1/24).

    Raises:
        NonConvergent: If Im(tau) is below the guard or M exceeds the cap
    """
    tau = as_tau(tau)
    im = mpmath.im(tau)
    if im < MIN_IMAGINARY_PART:
        raise NonConvergent(f"Im(tau) = {mpmath.nstr(im, 5)} is below {MIN_IMAGINARY_PART}")
    log_x = -2 * mpmath.pi * im / 24
    log_budget = mpmath.log(tol) + mpmath.log(1 - mpmath.exp(log_x))
    m = int(mpmath.ceil(mpmath.sqrt(log_budget / log_x))) + 1
    if m > MAX_ETA_TERMS:
        raise NonConvergent(
            f"eta at Im(tau) = {mpmath.nstr(im, 5)} needs {m} terms for tol {tol}"
        )
    return m


def eta_numeric(tau: TauLike, tol=1e-30, dps: int = DEFAULT_DPS) -> CMValueReport:
    """
    Dedekind eta at tau from the Euler identity with a geometric tail bound.

    Args:
        tau: Point in the upper half plane
        tol: Required bound on the discarded tail
        dps: mpmath working precision in decimal digits

    Returns:
        CMValueReport with tail_bound < tol

    Raises:
        NonConvergent: If Im(tau) < 0.01 or too many terms would be needed

    Example:
        >>> float(abs(eta_numeric(1j).value))
        0.7682254223260566
    """
    with mpmath.workdps(dps):
        tau = as_tau(tau)
        m = eta_terms_needed(tau, tol)
        total = mpmath.mpc(0)
        for n in range(1, m + 1):
            c = eta_character(n)
            if c:
                total += c * mpmath.exp(2j * mpmath.pi * tau * (n * n) / 24)
        x = mpmath.exp(-2 * mpmath.pi * mpmath.im(tau) / 24)
        bound = x ** ((m + 1) ** 2) / (1 - x)
        return CMValueReport(+total, +bound, terms_used=m)


def _eta_product(
    exponents: Dict,
    tau: mpmath.mpc,
    tol,
    dps: int
) -> Tuple[mpmath.mpc, mpmath.mpf, int]:
    """prod eta(m tau)^e with a bound from the relative error of each factor."""
    value = mpmath.mpc(1)
    growth = mpmath.mpf(1)
    terms = 0
    for m, e in exponents.items():
        m = Fraction(m)
        report = eta_numeric(tau * m.numerator / m.denominator, tol, dps)
        magnitude = abs(report.value)
        if report.tail_bound >= magnitude:
            raise NonConvergent(f"eta({m} tau) tail bound exceeds its value")
        rel = report.tail_bound / (magnitude - report.tail_bound)
        value *= report.value ** e
        growth *= (1 + rel) ** abs(e)
        terms = max(terms, report.terms_used)
    return value, abs(value) * (growth - 1), terms


def _polynomial(
    poly: Tuple,
    x: mpmath.mpc,
    err: mpmath.mpf
) -> Tuple[mpmath.mpc, mpmath.mpf]:
    c0, c1, c2 = (mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in poly)
    value = c2 * x * x + c1 * x + c0
    bound = abs(2 * c2 * x + c1) * err + abs(c2) * err * err
    return value, bound


def _j_value(tau: mpmath.mpc, tol, dps: int) -> Tuple[mpmath.mpc, mpmath.mpf, int]:
    value = mpmath.mpc(768)
    bound = mpmath.mpf(0)
    terms = 0
    for scale, exponents in J_ETA_TERMS:
        v, b, t = _eta_product(exponents, tau, tol, dps)
        value += scale * v
        bound += abs(scale) * b
        terms = max(terms, t)
    return value, bound, terms


def fn_numeric(
    series_id: str,
    tau: TauLike,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS,
    field_disc: Optional[int] = None
) -> CMValueReport:
    """
    Evaluate J, T3, T6, FON or FON3A at tau.

    Args:
        series_id: One of NUMERIC_IDS
        tau: Point in the upper half plane (CMPoint or complex)
        tolerance: Rounding budget
        dps: mpmath working precision
        field_disc: If given, round into Z[(D + sqrt(D))/2] instead of Z

    Returns:
        CMValueReport, rounded when the budget allows

    Example:
        >>> fn_numeric("J", 1j).rounded
        1728
    """
    series_id = series_id.upper()
    if series_id not in NUMERIC_IDS:
        raise ValueError(f"No numerical evaluator for '{series_id}'. Choose from {NUMERIC_IDS}")
    with mpmath.workdps(dps):
        tau = as_tau(tau)
        eta_tol = mpmath.mpf(10) ** (-(dps - 10))
        if series_id in ("J", "FON"):
            value, bound, terms = _j_value(tau, eta_tol, dps)
            if series_id == "FON":
                value, bound = _polynomial(FON_POLY, value, bound)
        elif series_id == "T6":
            value, bound, terms = _eta_product(T6_ETA, tau, eta_tol, dps)
            value += 5
        else:
            value, bound, terms = _eta_product(T3_ETA, tau, eta_tol, dps)
            value += 12
            if series_id == "FON3A":
                value, bound = _polynomial(FON3A_POLY, value, bound)
        report = CMValueReport(+value, +bound, terms_used=terms)
        if field_disc is None:
            report.rounded = round_rational(report, tolerance, 1)
        else:
            report.rounded = round_quadratic(report, field_disc, tolerance)
    return report


def round_rational(report: CMValueReport, tolerance: float, denominator: int = 1) -> Optional[Fraction]:
    """
    Nearest n/denominator to the value, if the error budget allows it.

    Returns an int when the result is integral, None when the rounding
    distance plus tail bound reaches the tolerance.
    """
    scaled = mpmath.re(report.value) * denominator
    candidate = Fraction(int(mpmath.nint(scaled)), denominator)
    if report.distance_to(candidate) + report.tail_bound < tolerance:
        return candidate.numerator if candidate.denominator == 1 else candidate
    return None


def round_quadratic(report: CMValueReport, D: int, tolerance: float) -> Optional[QuadraticValue]:
    """Nearest algebraic integer a + b sqrt(D) of Q(sqrt(D)), D < 0, if the budget allows."""
    root = mpmath.sqrt(-D)
    a2 = int(mpmath.nint(2 * mpmath.re(report.value)))
    b2 = int(mpmath.nint(2 * mpmath.im(report.value) / root))
    if D % 4 == 0 and (a2 % 2 or b2 % 2):
        return None
    if D % 4 == 1 and (a2 - b2) % 2:
        return None
    candidate = QuadraticValue(Fraction(a2, 2), Fraction(b2, 2), D)
    if report.distance_to(candidate) + report.tail_bound < tolerance:
        return candidate
    return None

