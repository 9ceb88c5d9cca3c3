"""
Traces of Singular Moduli

tr_N(f|D) sums a Gamma0(N)-invariant function over the CM points of the
level-N representatives of discriminant D, each point weighted by 1 over
its stabilizer order in PSL2(Z). Twisted traces insert the genus
character chi_D0(Q) and a factor 1/sqrt(D0).

The O'Nan 3A coefficients follow from

    C3A(D) = 12 tr_1(1|D) - 12 tr_3(1|D) + tr_3(f^ON_3A|D)

which is checked against the coefficients read off the 3A series.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional
import logging

import mpmath

from ..errors import CrossCheckFailed, NoSquareRoot, NotADiscriminant, RoundingFailed
from ..forms.characters import genus_char, is_discriminant, is_fundamental
from ..forms.classes import LevelRep, level_class_count, level_reps, square_roots_mod
from ..forms.quadratic_forms import CMPoint, tau_of
from ..modular.thompson import DEFAULT_MT_PRECISION, c3a_coeff
from ..series import FracSeries
from .values import (
    DEFAULT_DPS,
    DEFAULT_TOLERANCE,
    CMValueReport,
    QuadraticValue,
    fn_numeric,
    round_rational,
)

logger = logging.getLogger(__name__)

DEFAULT_TWISTED_SIGN = -1

# Level of the group each function is invariant under; "ONE" is the constant 1
FUNCTION_LEVELS = {"ONE": 1, "J": 1, "FON": 1, "T3": 3, "FON3A": 3, "T6": 6}


def _check_level(series_id: str, N: int) -> str:
    series_id = series_id.upper()
    if series_id not in FUNCTION_LEVELS:
        raise ValueError(f"No trace for '{series_id}'. Choose from {', '.join(FUNCTION_LEVELS)}")
    if N <= 0 or N % FUNCTION_LEVELS[series_id]:
        raise ValueError(
            f"{series_id} lives on Gamma0({FUNCTION_LEVELS[series_id]}); level {N} is not a multiple"
        )
    return series_id


def _reps_or_empty(N: int, D: int) -> List[LevelRep]:
    try:
        return level_reps(N, D)
    except NoSquareRoot:
        logger.debug("Q_%d(%d) is empty: %d is not a square mod %d", N, D, D, 4 * N)
        return []


def _finish(report: CMValueReport, tolerance: float, denominator: int, label: str) -> CMValueReport:
    report.rounded = round_rational(report, tolerance, denominator)
    if report.rounded is None:
        if report.tail_bound < tolerance:
            raise RoundingFailed(
                f"{label} = {mpmath.nstr(report.value, 20)} has no rational with denominator "
                f"{denominator} within {tolerance}"
            )
        logger.warning("%s: error bound %s exceeds tolerance %s", label,
                       mpmath.nstr(report.tail_bound, 5), tolerance)
    return report


def trace(
    series_id: str,
    N: int,
    D: int,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS
) -> CMValueReport:
    """
    tr_N(f|D) = sum over Gamma0(N) classes of weight(Q) f(tau_Q).

    Args:
        series_id: ONE, J, FON, T3, FON3A or T6
        N: Level, a multiple of the function's level
        D: Negative discriminant (fundamental when N > 1)
        tolerance: Rounding budget
        dps: mpmath working precision

    Returns:
        CMValueReport rounded to a rational with denominator dividing 6

    Raises:
        RoundingFailed: If the error budget is met but no such rational is near

    Example:
        >>> trace("FON", 1, -4).rounded
        143376
    """
    series_id = _check_level(series_id, N)
    label = f"tr_{N}({series_id}|{D})"
    if series_id == "ONE":
        count = level_class_count(N, D)
        exact = count.numerator if count.denominator == 1 else count
        return CMValueReport(mpmath.mpc(count.numerator) / count.denominator,
                             mpmath.mpf(0), rounded=exact)
    with mpmath.workdps(dps):
        value = mpmath.mpc(0)
        bound = mpmath.mpf(0)
        terms = 0
        for rep in _reps_or_empty(N, D):
            report = fn_numeric(series_id, tau_of(rep.form), tolerance, dps)
            w = mpmath.mpf(rep.weight.numerator) / rep.weight.denominator
            value += w * report.value
            bound += w * report.tail_bound
            terms = max(terms, report.terms_used)
        result = CMValueReport(+value, +bound, terms_used=terms)
    return _finish(result, tolerance, 6, label)


def twist_sign(rep: LevelRep, r: int, N: int, D0: int) -> int:
    """s(Q) = 1 when B = r mod 2N, sgn(D0) when B = -r mod 2N."""
    if (rep.residue - r) % (2 * N) == 0:
        return 1
    return 1 if D0 > 0 else -1


def twisted_trace(
    series_id: str,
    D: int,
    D0: int,
    N: int = 1,
    r: Optional[int] = None,
    sign: int = DEFAULT_TWISTED_SIGN,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS
) -> CMValueReport:
    """
    sign / sqrt(D0) * sum over classes with B = +-r mod 2N of
    s(Q) chi_D0(Q) weight(Q) f(tau_Q).

    Args:
        series_id: Function to trace
        D: Negative discriminant
        D0: Fundamental discriminant with D / D0 a discriminant
        N: Level
        r: Residue with r^2 = D mod 4N (default: the largest in [0, 2N))
        sign: Global sign convention (-1 makes the j-twist at -15 equal 85995)
        tolerance: Rounding budget
        dps: mpmath working precision

    Returns:
        CMValueReport rounded to an integer

    Example:
        >>> twisted_trace("J", -15, 5).rounded
        85995
    """
    series_id = _check_level(series_id, N)
    if not is_fundamental(D0) or D % D0 or not is_discriminant(D // D0):
        raise NotADiscriminant(f"{D0} does not split {D} into two discriminants")
    residues = square_roots_mod(D, N)
    if not residues:
        raise NoSquareRoot(f"r^2 = {D} mod {4 * N} has no solution")
    if r is None:
        r = residues[-1]
    elif r % (2 * N) not in residues:
        raise NoSquareRoot(f"{r}^2 != {D} mod {4 * N}")
    r %= 2 * N

    label = f"tr_{N}({series_id}|{D}, chi_{D0})"
    with mpmath.workdps(dps):
        total = mpmath.mpc(0)
        bound = mpmath.mpf(0)
        for rep in level_reps(N, D):
            if (rep.residue - r) % (2 * N) and (rep.residue + r) % (2 * N):
                continue
            chi = genus_char(rep.form, D0)
            s = twist_sign(rep, r, N, D0)
            w = mpmath.mpf(rep.weight.numerator) / rep.weight.denominator
            if series_id == "ONE":
                value, tail = mpmath.mpc(1), mpmath.mpf(0)
            else:
                report = fn_numeric(series_id, tau_of(rep.form), tolerance, dps)
                value, tail = report.value, report.tail_bound
            total += s * chi * w * value
            bound += w * tail
            logger.debug("%s: %s chi=%d s=%d", label, rep.form, chi, s)
        root = mpmath.sqrt(mpmath.mpc(D0))
        result = CMValueReport(sign * total / root, bound / abs(root))
    return _finish(result, tolerance, 1, label)


def c3a_via_traces(
    D: int,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS,
    cross_check: bool = True,
    prec: int = DEFAULT_MT_PRECISION
) -> int:
    """
    C3A(D) = 12 tr_1(1|D) - 12 tr_3(1|D) + tr_3(f^ON_3A|D).

    For D = 2 mod 3 the level-3 sets are empty and C3A(D) = 12 H(D).

    Args:
        D: Negative fundamental discriminant
        tolerance: Rounding budget
        dps: mpmath working precision
        cross_check: Compare with the coefficient of the 3A series
        prec: Series window used for the cross-check

    Raises:
        RoundingFailed: If the combination is not within tolerance of an integer
        CrossCheckFailed: If the series coefficient differs

    Example:
        >>> c3a_via_traces(-8)
        -188
    """
    if D >= 0 or not is_fundamental(D):
        raise NotADiscriminant(f"{D} is not a negative fundamental discriminant")
    tr1 = level_class_count(1, D)
    tr3 = level_class_count(3, D)
    f_trace = trace("FON3A", 3, D, tolerance, dps)
    with mpmath.workdps(dps):
        combined = 12 * (tr1 - tr3)
        value = mpmath.mpf(combined.numerator) / combined.denominator + f_trace.value
        report = CMValueReport(value, f_trace.tail_bound)
    rounded = round_rational(report, tolerance, 1)
    if rounded is None or Fraction(rounded).denominator != 1:
        raise RoundingFailed(f"C3A({D}) = {mpmath.nstr(value, 20)} is not within {tolerance} of an integer")
    result = int(rounded)
    logger.debug("C3A(%d) via traces: 12*%s - 12*%s + %s = %d", D, tr1, tr3, f_trace.rounded, result)
    if cross_check:
        from_series = c3a_coeff(D, prec)
        if from_series != result:
            raise CrossCheckFailed(f"C3A({D}): traces give {result}, series gives {from_series}")
    return result


def trace_series(
    series_id: str,
    N: int,
    D_max: int,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS
) -> FracSeries:
    """
    Generating series sum_{0 < |D| <= D_max} tr_N(f|D) q^|D|.

    At level N > 1 only fundamental discriminants contribute.

    Example:
        >>> str(trace_series("FON", 1, 7))
        '26752 q^3 + 143376 q^4 + 8288256 q^7 + O(q^8)'
    """
    terms: Dict[int, Fraction] = {}
    for n in range(3, D_max + 1):
        D = -n
        if D % 4 not in (0, 1):
            continue
        if N > 1 and not is_fundamental(D):
            continue
        terms[n] = trace(series_id, N, D, tolerance, dps).rounded
    return FracSeries.from_terms(terms, D_max + 1)


def thompson_q5_check(tolerance: float = DEFAULT_TOLERANCE, dps: int = DEFAULT_DPS) -> int:
    """-2 times the j-trace twisted by chi_5 at D = -15 (the q^5 coefficient -171990)."""
    return -2 * twisted_trace("J", -15, 5, tolerance=tolerance, dps=dps).rounded


@dataclass
class IdentityCheck:
    """Outcome of one singular-modulus identity."""
    name: str
    description: str
    expected: str
    computed: str
    error: float
    passed: bool


def _cm_value(series_id: str, point: CMPoint, dps: int) -> mpmath.mpc:
    return fn_numeric(series_id, point, dps=dps).value


def _golden() -> mpmath.mpf:
    return (1 + mpmath.sqrt(5)) / 2


SINGULAR_IDENTITIES: Dict[str, tuple] = {
    "j_sqrt_minus_15": (
        "j((1+sqrt(-15))/2) = -52515 - 85995 (1+sqrt(5))/2",
        lambda dps: _cm_value("J", CMPoint(-1, 1, -15), dps),
        lambda dps: -52515 - 85995 * _golden(),
    ),
    "j_i": (
        "j(i) = 1728",
        lambda dps: _cm_value("J", CMPoint(0, 1, -4), dps),
        lambda dps: mpmath.mpf(1728),
    ),
    "j_rho": (
        "j((-1+sqrt(-3))/2) = 0",
        lambda dps: _cm_value("J", CMPoint(1, 1, -3), dps),
        lambda dps: mpmath.mpf(0),
    ),
    "j_sqrt_minus_7": (
        "j((-1+sqrt(-7))/2) = -3375",
        lambda dps: _cm_value("J", CMPoint(1, 1, -7), dps),
        lambda dps: mpmath.mpf(-3375),
    ),
    "t3_sqrt_minus_11": (
        "T3((1+sqrt(-11))/6) = 17 - 8 sqrt(-11)",
        lambda dps: _cm_value("T3", CMPoint(-1, 3, -11), dps),
        lambda dps: QuadraticValue(Fraction(17), Fraction(-8), -11).to_mpc(),
    ),
    "twisted_j_minus_15": (
        "(1/sqrt(5)) (j((1+sqrt(-15))/4) - j((1+sqrt(-15))/2)) = 85995",
        lambda dps: twisted_trace("J", -15, 5, dps=dps).value,
        lambda dps: mpmath.mpf(85995),
    ),
    "twisted_t3_minus_11": (
        "(1/sqrt(-11)) (T3((-1+sqrt(-11))/6) - T3((1+sqrt(-11))/6)) = 16",
        lambda dps: twisted_trace("T3", -11, -11, N=3, dps=dps).value,
        lambda dps: mpmath.mpf(16),
    ),
    "thompson_q5": (
        "-2 x 85995 = -171990, the q^5 coefficient of the Thompson series",
        lambda dps: mpmath.mpf(thompson_q5_check(dps=dps)),
        lambda dps: mpmath.mpf(-171990),
    ),
}


def check_identity(
    name: str,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS
) -> IdentityCheck:
    """
    Evaluate one registered singular-modulus identity numerically.

    Raises:
        ValueError: If the identity name is unknown
    """
    if name not in SINGULAR_IDENTITIES:
        raise ValueError(f"Unknown identity '{name}'. Choose from {', '.join(SINGULAR_IDENTITIES)}")
    description, compute, expect = SINGULAR_IDENTITIES[name]
    with mpmath.workdps(dps):
        computed = compute(dps)
        expected = expect(dps)
        error = float(abs(computed - expected))
        return IdentityCheck(
            name=name,
            description=description,
            expected=mpmath.nstr(expected, 15),
            computed=mpmath.nstr(computed, 15),
            error=error,
            passed=error < tolerance,
        )


def check_all_identities(
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_DPS
) -> List[IdentityCheck]:
    return [check_identity(name, tolerance, dps) for name in SINGULAR_IDENTITIES]
