"""
McKay-Thompson Series of O'Nan Moonshine for the Class 3A

The vector-valued weight 3/2 form F^ON_3A = (F0, F1) is pinned down by two
identities over the ring of q-series:

    F0 theta0 + F1 theta1           = q d/dq T3
    F0 / theta0^3 + F1 / theta1^3   = R(T6)

with R(T6) = -(T6-5)^2 (T6+7) (T6^2 + 25/4 T6 + 35/4) / ((T6+3)^2 (T6+4)^2).
The system is solved by elimination through
Delta = theta0 / theta1^3 - theta1 / theta0^3, whose leading term is
1/8 q^(-3/4).

The coefficient of q^(|D|/4) in F0 (D = 0 mod 4) or F1 (D = 1 mod 4) is
C^ON_3A(D).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple
import logging

from ..errors import NonIntegralCoefficient, NotADiscriminant
from ..series import FracSeries, theta_r
from .named_series import t3_series, t6_series

logger = logging.getLogger(__name__)

DEFAULT_MT_PRECISION = 30


@dataclass(frozen=True)
class VectorPair:
    """
    Components of a vector-valued form indexed by r mod 2.

    Attributes:
        comp0: Integral exponents, carries D = 0 mod 4
        comp1: Exponents in Z - 1/4, carries D = 1 mod 4
    """
    comp0: FracSeries
    comp1: FracSeries

    def component_for(self, D: int) -> FracSeries:
        return self.comp0 if D % 4 == 0 else self.comp1

    def coefficient(self, D: int) -> Fraction:
        """Coefficient of q^(|D|/4) in the matching component (0 off the lattice)."""
        if D % 4 not in (0, 1):
            return 0
        return self.component_for(D).coefficient(Fraction(-D, 4))


def _r_of_t6(t6: FracSeries) -> FracSeries:
    numerator = (t6 - 5) * (t6 - 5) * (t6 + 7) * (t6 * t6 + t6 * Fraction(25, 4) + Fraction(35, 4))
    denominator = (t6 + 3) * (t6 + 3) * (t6 + 4) * (t6 + 4)
    return -(numerator / denominator)


@lru_cache(maxsize=None)
def mt_3a_system(prec: int = DEFAULT_MT_PRECISION) -> Tuple[FracSeries, FracSeries, FracSeries, FracSeries]:
    """
    Ingredients (theta0, theta1, q dT3/dq, R(T6)) of the defining system.
    """
    theta0 = theta_r(0, prec + 2)
    theta1 = theta_r(1, prec + 2)
    derivative = t3_series(prec + 1).series.q_derivative()
    rhs = _r_of_t6(t6_series(prec + 1).series)
    return theta0, theta1, derivative, rhs


@lru_cache(maxsize=None)
def fon_mt_3a(prec: int = DEFAULT_MT_PRECISION) -> VectorPair:
    """
    Solve the 3A linear system for (F0, F1).

    Args:
        prec: Working window in integer q-steps; q^17 in F0 needs about 22,
              and |D| <= 100 needs 27

    Returns:
        VectorPair with F0 = -q^-1 + 2 + 6q - 188q^2 + ...

    Example:
        >>> fon_mt_3a(6).comp0.coefficient(2)
        -188
    """
    if prec < 3:
        raise ValueError(f"fon_mt_3a needs prec >= 3, got {prec}")
    theta0, theta1, derivative, rhs = mt_3a_system(prec)
    inv0_cubed = theta0.pow_int(-3)
    inv1_cubed = theta1.pow_int(-3)
    delta = theta0 * inv1_cubed - theta1 * inv0_cubed
    comp0 = (derivative * inv1_cubed - rhs * theta1) / delta
    comp1 = (rhs * theta0 - derivative * inv0_cubed) / delta
    logger.debug(
        "F^ON_3A solved: F0 known below q^%s, F1 below q^%s",
        comp0.precision, comp1.precision,
    )
    return VectorPair(comp0.normalize(), comp1.normalize())


def system_residuals(pair: VectorPair, prec: int = DEFAULT_MT_PRECISION) -> Tuple[FracSeries, FracSeries]:
    """Both defining identities with the right-hand side subtracted."""
    theta0, theta1, derivative, rhs = mt_3a_system(prec)
    first = pair.comp0 * theta0 + pair.comp1 * theta1 - derivative
    second = pair.comp0 * theta0.pow_int(-3) + pair.comp1 * theta1.pow_int(-3) - rhs
    return first, second


def c3a_coeff(D: int, prec: int = DEFAULT_MT_PRECISION) -> int:
    """
    C^ON_3A(D), read off the 3A series.

    Args:
        D: Negative discriminant
        prec: Working window for fon_mt_3a

    Raises:
        NotADiscriminant: If D >= 0 or D = 2, 3 mod 4
        PrecisionExhausted: If |D|/4 is beyond the solved window
        NonIntegralCoefficient: If the coefficient is not an integer

    Example:
        >>> c3a_coeff(-8)
        -188
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise NotADiscriminant(f"{D} is not a negative discriminant")
    value = fon_mt_3a(prec).coefficient(D)
    if Fraction(value).denominator != 1:
        raise NonIntegralCoefficient(f"C3A({D}) came out as {value}")
    return int(value)


def vector_check(pair: VectorPair) -> FracSeries:
    """F0(4 tau) + F1(4 tau) = -q^-4 + 2 + sum_D C(D) q^|D|."""
    return pair.comp0.rescale(4) + pair.comp1.rescale(4)
