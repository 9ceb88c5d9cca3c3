"""
Eta and Theta Series

Sparse constructors for the building blocks of every modular form in the
package: the Dedekind eta function via the Euler identity, eta products
of arbitrary level, and the weight 1/2 and 3/2 theta series.
"""

from fractions import Fraction
from math import ceil, isqrt
from typing import Dict, Union

from .frac_series import Exponent, FracSeries


def eta_character(n: int) -> int:
    """
    Kronecker symbol (12/n), the coefficient pattern of the Euler identity.

    Returns:
        +1 for n = 1, 11 mod 12; -1 for n = 5, 7 mod 12; 0 otherwise
    """
    r = n % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def eta_series(prec: int) -> FracSeries:
    """
    Dedekind eta function eta(tau) = sum_{n>0} (12/n) q^(n^2/24).

    Args:
        prec: Relative precision in integer q-steps; the result is
              q^(1/24) (1 + ... + O(q^prec))

    Returns:
        Series over denominator 24, known below q^(prec + 1/24)

    Example:
        >>> eta_series(2).coefficient(Fraction(25, 24))
        -1
    """
    if prec <= 0:
        raise ValueError(f"prec must be positive, got {prec}")
    bound = 24 * prec + 1
    terms = {}
    for n in range(1, isqrt(bound - 1) + 1):
        c = eta_character(n)
        if c:
            terms[Fraction(n * n, 24)] = c
    return FracSeries.from_terms(terms, Fraction(bound, 24), denom=24)


def eta_product_form(prec: int) -> FracSeries:
    """
    eta(tau) from the product q^(1/24) prod (1 - q^n), truncated like eta_series.

    Independent of the Euler identity; used to cross-check it.
    """
    product = FracSeries.constant(1, prec)
    for n in range(1, prec):
        product = product * (1 - FracSeries.from_terms({n: 1}, prec))
    shift = FracSeries.from_terms({Fraction(1, 24): 1}, Fraction(24 * prec + 1, 24))
    return product * shift


def eta_quotient(exponents: Dict[Union[int, Fraction], int], prec: int) -> FracSeries:
    """
    Eta product prod_m eta(m tau)^(e_m).

    Args:
        exponents: Map from (positive rational) level m to exponent e_m
        prec: Relative precision in integer q-steps

    Returns:
        q^v (c + ... + O(q^prec)) with v = sum m e_m / 24

    Example:
        >>> t = eta_quotient({1: 12, 3: -12}, 5) + 12   # T3
    """
    result = None
    for m, e in exponents.items():
        if e == 0:
            continue
        m = Fraction(m)
        base = eta_series(max(ceil(prec / m), 1)).rescale(m)
        lead = base.valuation()
        base = base.truncate(lead + prec)
        factor = base.pow_int(e)
        result = factor if result is None else result * factor
    if result is None:
        return FracSeries.constant(1, prec)
    return result


def theta_r(r: int, prec: Exponent) -> FracSeries:
    """
    Weight 1/2 theta series theta_r = sum_{n = r mod 2} q^(n^2/4), r in {0, 1}.

    Args:
        r: Residue 0 or 1
        prec: Absolute precision (exponents < prec are known)

    Example:
        >>> str(theta_r(0, 5))
        '1 + 2 q + 2 q^4 + O(q^5)'
    """
    if r not in (0, 1):
        raise ValueError(f"r must be 0 or 1, got {r}")
    bound = Fraction(prec) * 4
    terms: Dict[Fraction, int] = {}
    n = r
    while n * n < bound:
        e = Fraction(n * n, 4)
        terms[e] = terms.get(e, 0) + (1 if n == 0 else 2)
        n += 2
    return FracSeries.from_terms(terms, prec, denom=4)


def theta1_mr(m: int, r: int, prec: Exponent) -> FracSeries:
    """
    Weight 3/2 unary theta series sum_{n = r mod 2m} n q^(n^2/(4m)).

    Args:
        m: Index (positive)
        r: Residue class mod 2m (0 <= r)
        prec: Absolute precision
    """
    if m <= 0 or r < 0:
        raise ValueError(f"Need m > 0 and r >= 0, got m={m}, r={r}")
    bound = Fraction(prec) * 4 * m
    terms: Dict[Fraction, int] = {}
    limit = isqrt(ceil(bound)) + 1
    for n in range(-limit, limit + 1):
        if (n - r) % (2 * m) == 0 and n * n < bound and n:
            e = Fraction(n * n, 4 * m)
            terms[e] = terms.get(e, 0) + n
    return FracSeries.from_terms(terms, prec, denom=4 * m)


def theta_check(prec: Exponent) -> FracSeries:
    """theta_0(4 tau) + theta_1(4 tau) = sum_{n in Z} q^(n^2)."""
    prec = Fraction(prec)
    return theta_r(0, prec / 4).rescale(4) + theta_r(1, prec / 4).rescale(4)
