"""
Kronecker Symbols, Fundamental Discriminants and Genus Characters

The Kronecker symbol is built on sympy's Jacobi symbol and extended to
even and negative lower arguments. Genus characters chi_D0(Q) are read
off from a value Q represents coprime to D0.
"""

from math import gcd
from typing import List
import logging

from sympy import factorint, jacobi_symbol

from ..errors import CrossCheckFailed, NoCoprimeRepresentation, NotADiscriminant
from .quadratic_forms import QuadForm

logger = logging.getLogger(__name__)

REPRESENTATION_SEARCH_BOUND = 50


def kronecker(a: int, n: int) -> int:
    """
    Kronecker symbol (a/n) for arbitrary integers a, n.

    Examples:
        >>> kronecker(5, 2)
        -1
        >>> kronecker(-8, -15)
        1
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def is_discriminant(D: int) -> bool:
    """True if D is a nonzero integer congruent to 0 or 1 mod 4."""
    return D != 0 and D % 4 in (0, 1)


def is_fundamental(D: int) -> bool:
    """
    True if D is the discriminant of a quadratic field (or D = 1).

    D = 1 mod 4 must be squarefree; D = 4d needs d squarefree with
    d = 2, 3 mod 4.

    Examples:
        >>> is_fundamental(-8), is_fundamental(-12), is_fundamental(-68)
        (True, False, True)
    """
    if D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        d = D // 4
        return d % 4 in (2, 3) and is_squarefree(d)
    return False


def represented_values_coprime_to(
    form: QuadForm,
    modulus: int,
    count: int = 2,
    bound: int = REPRESENTATION_SEARCH_BOUND
) -> List[int]:
    """
    Distinct nonzero values Q(x, y) coprime to modulus, smallest search box first.

    Args:
        form: Quadratic form
        modulus: Values must be coprime to this
        count: How many distinct values to collect
        bound: Search |x|, |y| <= bound
    """
    found: List[int] = []
    for radius in range(0, bound + 1):
        for x in range(-radius, radius + 1):
            for y in range(-radius, radius + 1):
                if max(abs(x), abs(y)) != radius:
                    continue
                n = form(x, y)
                if n and gcd(n, modulus) == 1 and n not in found:
                    found.append(n)
                    if len(found) >= count:
                        return found
    return found


def genus_char(form: QuadForm, D0: int) -> int:
    """
    Genus character chi_D0(Q) = (D0/n) for any n represented by Q, gcd(n, D0) = 1.

    Two distinct represented values are tried and must agree.

    Args:
        form: Form whose discriminant is divisible by D0
        D0: Fundamental discriminant with disc(Q)/D0 a discriminant

    Returns:
        +1 or -1

    Raises:
        NotADiscriminant: If D0 does not split disc(Q) into two discriminants
        NoCoprimeRepresentation: If no coprime value is found in the search box
    """
    D = form.disc
    if not is_fundamental(D0) or D % D0 != 0 or not is_discriminant(D // D0):
        raise NotADiscriminant(f"{D0} does not split disc {D} into discriminants")
    values = represented_values_coprime_to(form, D0)
    if not values:
        raise NoCoprimeRepresentation(
            f"{form} represents no value coprime to {D0} with |x|, |y| <= "
            f"{REPRESENTATION_SEARCH_BOUND}"
        )
    chars = {kronecker(D0, n) for n in values}
    if len(chars) != 1:
        raise CrossCheckFailed(
            f"Genus character of {form} for D0={D0} differs across values {values}"
        )
    logger.debug("chi_%d(%s) from represented values %s", D0, form, values)
    return chars.pop()
