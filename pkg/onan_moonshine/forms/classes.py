"""
Class Lists, Class Numbers and Level-N Representatives

Reduced forms give one representative per SL2(Z) class of positive definite
forms. Each class is weighted by 1 over the order of its stabilizer in
PSL2(Z): 1/3 for multiples of x^2 + xy + y^2, 1/2 for multiples of
x^2 + y^2, and 1 otherwise.

For a level N and residue r with r^2 = D mod 4N, the forms with
A = 0 mod N and B = r mod 2N, taken up to Gamma0(N), correspond to the
SL2(Z) classes of discriminant D through the lift
(A, B, C) -> (A/N, B, NC).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List
import logging

from ..errors import NoSquareRoot, NotADiscriminant, RepresentativeSearchFailed
from .characters import is_discriminant, is_fundamental
from .quadratic_forms import QuadForm, reduce

logger = logging.getLogger(__name__)


@dataclass
class ClassList:
    """
    Reduced representatives of discriminant D with their trace weights.

    Attributes:
        D: Negative discriminant
        reps: Reduced forms, ordered by (A, B)
        weights: Parallel list of weights (1, 1/2 or 1/3)
    """
    D: int
    reps: List[QuadForm] = field(default_factory=list)
    weights: List[Fraction] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.reps)

    def primitive(self) -> List[QuadForm]:
        return [q for q in self.reps if q.is_primitive()]


@dataclass(frozen=True)
class LevelRep:
    """
    Representative of one Gamma0(N) class in Q_N(D, r).

    Attributes:
        form: Form with A = 0 mod N and B = r mod 2N
        residue: r in [0, 2N)
        weight: Trace weight of the class
        lifted: Reduced form of the SL2(Z) class it corresponds to
    """
    form: QuadForm
    residue: int
    weight: Fraction
    lifted: QuadForm


def check_discriminant(D: int) -> None:
    if D >= 0 or not is_discriminant(D):
        raise NotADiscriminant(f"{D} is not a negative discriminant (need D < 0, D = 0, 1 mod 4)")


def stabilizer_weight(form: QuadForm) -> Fraction:
    """
    1 / #stabilizer in PSL2(Z) for a positive definite form.

    Automorphs come from solutions of t^2 - D' u^2 = 4 with D' the
    discriminant of the primitive part: 6 for D' = -3, 4 for D' = -4,
    2 otherwise, halved for -I.
    """
    g = form.content
    primitive_disc = form.disc // (g * g)
    if primitive_disc == -3:
        return Fraction(1, 3)
    if primitive_disc == -4:
        return Fraction(1, 2)
    return Fraction(1)


def enumerate_reduced(D: int) -> ClassList:
    """
    All reduced positive definite forms of discriminant D.

    Args:
        D: Negative discriminant

    Returns:
        ClassList ordered by (A, B), imprimitive forms included

    Raises:
        NotADiscriminant: If D >= 0 or D = 2, 3 mod 4

    Example:
        >>> [q.as_tuple() for q in enumerate_reduced(-68).reps]
        [(1, 0, 17), (2, 2, 9), (3, -2, 6), (3, 2, 6)]
    """
    check_discriminant(D)
    classes = ClassList(D)
    A = 1
    while 3 * A * A <= -D:
        for B in range(-A + 1, A + 1):
            if (B * B - D) % (4 * A):
                continue
            form = QuadForm(A, B, (B * B - D) // (4 * A))
            if form.is_reduced():
                classes.reps.append(form)
                classes.weights.append(stabilizer_weight(form))
        A += 1
    return classes


def class_number(D: int) -> int:
    """
    Number of classes of primitive positive definite forms of discriminant D.

    Example:
        >>> class_number(-8), class_number(-68)
        (1, 4)
    """
    return len(enumerate_reduced(D).primitive())


def hurwitz_number(D: int) -> Fraction:
    """
    Hurwitz class number H(|D|): all classes, stabilizer weighted.

    Example:
        >>> hurwitz_number(-3), hurwitz_number(-12)
        (Fraction(1, 3), Fraction(4, 3))
    """
    return sum(enumerate_reduced(D).weights, Fraction(0))


def square_roots_mod(D: int, N: int) -> List[int]:
    """Residues r in [0, 2N) with r^2 = D mod 4N."""
    return [r for r in range(2 * N) if (r * r - D) % (4 * N) == 0]


def level_reps(N: int, D: int) -> List[LevelRep]:
    """
    Gamma0(N) representatives of Q_N(D, r) for every admissible residue r.

    For N = 1 these are the reduced forms themselves. Otherwise forms with
    A = N k are searched in increasing k, B in (-A, A] with B = r mod 2N,
    and each one is lifted and reduced; the first hit per SL2(Z) class is
    kept.

    Args:
        N: Level (positive)
        D: Negative fundamental discriminant (any discriminant for N = 1)

    Returns:
        Representatives ordered by residue, then by reduced class

    Raises:
        NoSquareRoot: If r^2 = D mod 4N has no solution
        RepresentativeSearchFailed: If the search bound runs out

    Example:
        >>> [(x.form.as_tuple(), x.residue) for x in level_reps(3, -8)]
        [((3, 2, 1), 2), ((3, -2, 1), 4)]
    """
    check_discriminant(D)
    if N <= 0:
        raise ValueError(f"Level must be positive, got {N}")
    classes = enumerate_reduced(D)
    if N == 1:
        r = D % 2
        return [
            LevelRep(q, r, w, q) for q, w in zip(classes.reps, classes.weights)
        ]
    if not is_fundamental(D):
        raise NotADiscriminant(
            f"Level {N} representatives need a fundamental discriminant, got {D}"
        )
    residues = square_roots_mod(D, N)
    if not residues:
        raise NoSquareRoot(f"r^2 = {D} mod {4 * N} has no solution")

    order = {q: i for i, q in enumerate(classes.reps)}
    k_max = max(-D, 16) * N
    reps: List[LevelRep] = []
    for r in residues:
        found: Dict[QuadForm, QuadForm] = {}
        for k in range(1, k_max + 1):
            A = N * k
            start = r - ((r + A - 1) // (2 * N)) * 2 * N
            # B runs over the residue class r mod 2N inside (-A, A]
            for B in range(start, A + 1, 2 * N):
                if B <= -A or (B * B - D) % (4 * A):
                    continue
                C = (B * B - D) // (4 * A)
                lifted = reduce(QuadForm(A // N, B, N * C))
                if lifted not in found:
                    found[lifted] = QuadForm(A, B, C)
            if len(found) == len(classes):
                break
        if len(found) != len(classes):
            raise RepresentativeSearchFailed(
                f"Found {len(found)} of {len(classes)} classes of Q_{N}({D}, {r}) "
                f"with A <= {N * k_max}"
            )
        logger.debug("Q_%d(%d, %d): representatives found with A <= %d", N, D, r, A)
        for lifted in sorted(found, key=order.__getitem__):
            form = found[lifted]
            reps.append(LevelRep(form, r, stabilizer_weight(form), lifted))
    return reps


def level_class_count(N: int, D: int) -> Fraction:
    """tr_N(1|D): weighted number of Gamma0(N) classes over all residues."""
    try:
        return sum((x.weight for x in level_reps(N, D)), Fraction(0))
    except NoSquareRoot:
        return Fraction(0)
