"""
Truncated Laurent Series in Fractional Powers of q

FracSeries is the carrier for every q-expansion in the package. Exponents
live in (1/d)Z for a per-series denominator d, coefficients are exact
(int when integral, Fraction otherwise), and every series knows the
exponent from which on its coefficients are unknown.

Truncation bookkeeping is pessimistic: a result never claims more known
terms than its inputs can justify.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union
import logging

from ..errors import PrecisionExhausted, ZeroLeadingCoefficient

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]
Exponent = Union[int, Fraction]


def _exact(value: Coefficient) -> Coefficient:
    """Collapse integral Fractions to int so integer series stay fast."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _divide(value: Coefficient, divisor: Coefficient) -> Coefficient:
    if isinstance(value, int) and isinstance(divisor, int):
        if value % divisor == 0:
            return value // divisor
        return Fraction(value, divisor)
    return _exact(Fraction(value) / Fraction(divisor))


class FracSeries:
    """
    Truncated Laurent series sum c_n q^(n/denom), known for n < prec.

    Values are immutable once constructed; every operation returns a new
    series.

    Attributes:
        denom: Exponent denominator d (positive)
        lo: Numerator of the first stored exponent
        coeffs: Dense tuple of coefficients for numerators lo .. prec-1
        prec: Numerator bound; exponents >= prec/denom are unknown

    Example:
        >>> j = FracSeries.from_terms({-1: 1, 0: 744, 1: 196884}, prec=2)
        >>> str(j)
        'q^-1 + 744 + 196884 q + O(q^2)'
    """

    __slots__ = ("denom", "lo", "coeffs", "prec")

    def __init__(
        self,
        denom: int,
        lo: int,
        coeffs: Sequence[Coefficient],
        prec: int
    ):
        if denom <= 0:
            raise ValueError(f"Exponent denominator must be positive, got {denom}")
        if lo > prec:
            lo, coeffs = prec, ()
        if len(coeffs) != prec - lo:
            raise ValueError(
                f"Expected {prec - lo} coefficients for window [{lo}, {prec}), "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", tuple(_exact(c) for c in coeffs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("FracSeries is immutable")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_terms(
        cls,
        terms: Dict[Exponent, Coefficient],
        prec: Exponent,
        denom: Optional[int] = None
    ) -> "FracSeries":
        """
        Build a series from an exponent -> coefficient map.

        Args:
            terms: Map from rational exponent to coefficient
            prec: Exponent from which on coefficients are unknown
            denom: Exponent denominator (default: smallest that fits)

        Returns:
            The series; terms at or beyond prec are dropped
        """
        prec = Fraction(prec)
        if denom is None:
            denom = prec.denominator
            for e in terms:
                denom = lcm(denom, Fraction(e).denominator)
        if (prec * denom).denominator != 1:
            raise ValueError(f"Precision {prec} is not a multiple of 1/{denom}")
        prec_n = int(prec * denom)

        numerators = {}
        for e, c in terms.items():
            n = Fraction(e) * denom
            if n.denominator != 1:
                raise ValueError(f"Exponent {e} is not a multiple of 1/{denom}")
            if n < prec_n and c:
                numerators[int(n)] = c

        lo = min(numerators, default=prec_n)
        coeffs = [0] * (prec_n - lo)
        for n, c in numerators.items():
            coeffs[n - lo] = c
        return cls(denom, lo, coeffs, prec_n)

    @classmethod
    def constant(cls, value: Coefficient, prec: Exponent) -> "FracSeries":
        """The constant series value + O(q^prec)."""
        return cls.from_terms({0: value}, prec)

    @classmethod
    def zero(cls, prec: Exponent) -> "FracSeries":
        return cls.from_terms({}, prec)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def precision(self) -> Fraction:
        """Exponent from which on coefficients are unknown."""
        return Fraction(self.prec, self.denom)

    def valuation_numerator(self) -> Optional[int]:
        """Numerator of the lowest nonzero known term, or None."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.lo + i
        return None

    def valuation(self) -> Optional[Fraction]:
        """Exponent of the lowest nonzero known term, or None."""
        n = self.valuation_numerator()
        return None if n is None else Fraction(n, self.denom)

    def coefficient(self, exponent: Exponent) -> Coefficient:
        """
        Coefficient of q^exponent.

        Raises:
            PrecisionExhausted: If the exponent is at or beyond the known window
        """
        n = Fraction(exponent) * self.denom
        if n >= self.prec:
            raise PrecisionExhausted(
                f"Coefficient of q^{exponent} requested but series is only "
                f"known below q^{self.precision}"
            )
        if n.denominator != 1 or n < self.lo:
            return 0
        return self.coeffs[int(n) - self.lo]

    def terms(self) -> Iterator[Tuple[Fraction, Coefficient]]:
        """Iterate (exponent, coefficient) over nonzero known terms."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.lo + i, self.denom), c

    def principal_part(self) -> Dict[Fraction, Coefficient]:
        return {e: c for e, c in self.terms() if e < 0}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coefficient_denominators(self) -> List[int]:
        return sorted({Fraction(c).denominator for c in self.coeffs if c})

    # ------------------------------------------------------------------
    # Denominator handling
    # ------------------------------------------------------------------

    def with_denom(self, denom: int) -> "FracSeries":
        """Re-express the series over a multiple of its denominator."""
        if denom % self.denom:
            raise ValueError(f"{denom} is not a multiple of {self.denom}")
        k = denom // self.denom
        if k == 1:
            return self
        coeffs = [0] * ((self.prec - self.lo) * k)
        for i, c in enumerate(self.coeffs):
            if c:
                coeffs[i * k] = c
        return FracSeries(denom, self.lo * k, coeffs, self.prec * k)

    def normalize(self) -> "FracSeries":
        """Reduce the denominator as far as the stored exponents allow."""
        g = gcd(self.denom, self.lo, self.prec)
        for i, c in enumerate(self.coeffs):
            if g == 1:
                return self
            if c:
                g = gcd(g, self.lo + i)
        if g == 1:
            return self
        return FracSeries(
            self.denom // g,
            self.lo // g,
            self.coeffs[::g],
            self.prec // g,
        )

    def truncate(self, prec: Exponent) -> "FracSeries":
        """Forget every coefficient at exponent >= prec."""
        n = Fraction(prec) * self.denom
        if n.denominator != 1:
            return self.with_denom(lcm(self.denom, n.denominator)).truncate(prec)
        n = int(n)
        if n >= self.prec:
            return self
        return FracSeries(self.denom, min(self.lo, n), self.coeffs[:max(n - self.lo, 0)], n)

    @staticmethod
    def _align(a: "FracSeries", b: "FracSeries") -> Tuple["FracSeries", "FracSeries"]:
        d = lcm(a.denom, b.denom)
        return a.with_denom(d), b.with_denom(d)

    @staticmethod
    def _coerce(other, prec: Fraction) -> Optional["FracSeries"]:
        if isinstance(other, FracSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return FracSeries.constant(other, prec)
        return None

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def add(self, other: "FracSeries") -> "FracSeries":
        """Coefficientwise sum, known up to the smaller precision."""
        a, b = self._align(self, other)
        prec = min(a.prec, b.prec)
        lo = min(a.lo, b.lo)
        out = [0] * max(prec - lo, 0)
        for s in (a, b):
            for i, c in enumerate(s.coeffs):
                n = s.lo + i
                if n >= prec:
                    break
                if c:
                    out[n - lo] += c
        return FracSeries(a.denom, lo, out, prec).normalize()

    def scale(self, factor: Coefficient) -> "FracSeries":
        return FracSeries(self.denom, self.lo, [c * factor for c in self.coeffs], self.prec)

    def mul(self, other: "FracSeries") -> "FracSeries":
        """
        Cauchy product.

        The result is known below min(prec_a + val_b, prec_b + val_a),
        where val is the exponent of the lowest nonzero known term.
        """
        a, b = self._align(self, other)
        va = a.valuation_numerator()
        vb = b.valuation_numerator()
        va = a.prec if va is None else va
        vb = b.prec if vb is None else vb
        prec = min(a.prec + vb, b.prec + va)
        lo = a.lo + b.lo
        if lo >= prec:
            return FracSeries(a.denom, prec, (), prec)

        width = prec - lo
        out: List[Coefficient] = [0] * width
        nz_b = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            limit = width - i
            if limit <= 0:
                break
            for j, y in nz_b:
                if j >= limit:
                    break
                out[i + j] += x * y
        return FracSeries(a.denom, lo, out, prec).normalize()

    def invert(self) -> "FracSeries":
        """
        Multiplicative inverse.

        If the lowest nonzero term is c q^(m/d), the inverse starts at
        q^(-m/d) and keeps the same relative window (prec - m).

        Raises:
            ZeroLeadingCoefficient: If no known coefficient is nonzero
        """
        m = self.valuation_numerator()
        if m is None:
            raise ZeroLeadingCoefficient(
                f"Cannot invert a series with no nonzero term below q^{self.precision}"
            )
        rel = self.coeffs[m - self.lo:]
        width = len(rel)
        lead = rel[0]
        nz = [(i, c) for i, c in enumerate(rel) if c and i > 0]

        inv: List[Coefficient] = [0] * width
        inv[0] = _divide(1, lead)
        for k in range(1, width):
            total: Coefficient = 0
            for i, c in nz:
                if i > k:
                    break
                b = inv[k - i]
                if b:
                    total += c * b
            inv[k] = _divide(-total, lead) if total else 0
        return FracSeries(self.denom, -m, inv, -m + width).normalize()

    def div(self, other: "FracSeries") -> "FracSeries":
        return self.mul(other.invert())

    def pow_int(self, k: int) -> "FracSeries":
        """
        Integer power by square-and-multiply.

        pow_int(0) is 1 known to the relative window of the base.
        """
        if k < 0:
            return self.invert().pow_int(-k)
        if k == 0:
            v = self.valuation_numerator()
            v = self.lo if v is None else v
            return FracSeries.constant(1, Fraction(self.prec - v, self.denom))
        result: Optional[FracSeries] = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    def q_derivative(self) -> "FracSeries":
        """q d/dq: c q^e -> e c q^e."""
        return FracSeries(
            self.denom,
            self.lo,
            [c * Fraction(self.lo + i, self.denom) if c else 0
             for i, c in enumerate(self.coeffs)],
            self.prec,
        )

    def rescale(self, k: Exponent) -> "FracSeries":
        """
        Substitute q -> q^k (tau -> k tau) for a positive rational k.

        rescale(2) turns eta(tau) into eta(2 tau); rescale(Fraction(1, 2))
        turns it into eta(tau/2) and doubles the denominator.
        """
        k = Fraction(k)
        if k <= 0:
            raise ValueError(f"Rescaling factor must be positive, got {k}")
        p, s = k.numerator, k.denominator
        coeffs = [0] * ((self.prec - self.lo) * p)
        for i, c in enumerate(self.coeffs):
            if c:
                coeffs[i * p] = c
        return FracSeries(self.denom * s, self.lo * p, coeffs, self.prec * p).normalize()

    def compose_polynomial(self, poly: Sequence[Coefficient]) -> "FracSeries":
        """
        Evaluate sum poly[k] * self^k by Horner's rule.

        Args:
            poly: Coefficients in increasing degree
        """
        if not poly:
            return FracSeries.zero(self.precision)
        if len(poly) == 1:
            return FracSeries.constant(poly[0], self.precision)
        # start from the linear term so the window is not narrowed by a constant factor
        result = self.scale(poly[-1]) + poly[-2]
        for c in reversed(poly[:-2]):
            result = result.mul(self) + c
        return result

    # ------------------------------------------------------------------
    # Operators
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self.precision)
        return NotImplemented if other is None else self.add(other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other, self.precision)
        return NotImplemented if other is None else self.add(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, FracSeries):
            return self.mul(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / other)
        if isinstance(other, FracSeries):
            return self.div(other)
        return NotImplemented

    def __pow__(self, k: int):
        return self.pow_int(k)

    def agrees_with(self, other: "FracSeries") -> bool:
        """True if both series have the same coefficients on their common window."""
        a, b = self._align(self, other)
        prec = min(a.prec, b.prec)
        lo = min(a.lo, b.lo)
        for n in range(lo, prec):
            ca = a.coeffs[n - a.lo] if a.lo <= n else 0
            cb = b.coeffs[n - b.lo] if b.lo <= n else 0
            if ca != cb:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self.precision == other.precision and self.agrees_with(other)

    __hash__ = None

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms():
            parts.append(_format_term(c, e))
        text = ""
        for i, part in enumerate(parts):
            if i == 0:
                text = part if not part.startswith("-") else "-" + part[1:].lstrip()
            elif part.startswith("-"):
                text += " - " + part[1:].lstrip()
            else:
                text += " + " + part
        big_o = f"O(q^{_format_exponent(self.precision)})"
        return f"{text} + {big_o}" if text else big_o

    def __repr__(self) -> str:
        return f"FracSeries({self})"


def _format_exponent(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _format_term(c: Coefficient, e: Fraction) -> str:
    sign = "-" if c < 0 else ""
    mag = -c if c < 0 else c
    if e == 0:
        return f"{sign}{mag}"
    q = "q" if e == 1 else f"q^{_format_exponent(e)}"
    if mag == 1:
        return f"{sign}{q}"
    return f"{sign}{mag} {q}"
