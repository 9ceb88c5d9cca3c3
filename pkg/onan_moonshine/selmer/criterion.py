"""
Selmer Criterion for Quadratic Twists of E15

For a negative fundamental discriminant D with D = 1 mod 3 and
D = 2, 3 mod 5, Sel5(E15 (x) D) is nontrivial exactly when
C3A(D) + h(D) = 0 mod 5. When in addition L(E15 (x) D, 1) != 0, the
same congruence decides whether 5 divides #Sha(E15 (x) D).

This module decides admissibility, assembles the verdict from the class
number, the 3A coefficient (series route, optionally the CM-trace route)
and the twisted L-value, and carries the attested coefficients of the
weight 3/2 cusp form G15.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import logging

from ..errors import NotAdmissible, UnknownCoefficient
from ..forms.characters import is_fundamental
from ..forms.classes import class_number
from ..modular.thompson import DEFAULT_MT_PRECISION, c3a_coeff
from ..cm.traces import c3a_via_traces
from ..cm.values import DEFAULT_DPS, DEFAULT_TOLERANCE
from ..lfunctions.special_values import LValueReport, twisted_l_value

logger = logging.getLogger(__name__)

SELMER_PRIME = 5

# Attested coefficients of G15 = q^3 - 2q^8 - q^15 + 2q^20 + ...
G15_TABLE: Dict[int, int] = {-3: 1, -8: -2, -15: -1, -20: 2}


@dataclass
class AdmissibilityReport:
    """
    Which hypotheses of the criterion D satisfies.

    Truthy exactly when all of them hold.
    """
    D: int
    negative: bool
    fundamental: bool
    mod3: bool
    mod5: bool

    @property
    def admissible(self) -> bool:
        return self.negative and self.fundamental and self.mod3 and self.mod5

    def __bool__(self) -> bool:
        return self.admissible

    def reasons(self) -> List[str]:
        """Failed hypotheses, empty when admissible."""
        failed = []
        if not self.negative:
            failed.append(f"{self.D} is not negative")
        if not self.fundamental:
            failed.append(f"{self.D} is not a fundamental discriminant")
        if not self.mod3:
            failed.append(f"{self.D} = {self.D % 3} mod 3, need 1")
        if not self.mod5:
            failed.append(f"{self.D} = {self.D % 5} mod 5, need 2 or 3")
        return failed


def admissible(D: int) -> AdmissibilityReport:
    """
    Check D < 0 fundamental, D = 1 mod 3, D = 2, 3 mod 5 (residues in [0, m)).

    Example:
        >>> bool(admissible(-8)), bool(admissible(-11))
        (True, False)
    """
    if D == 0:
        raise ValueError("D must be nonzero")
    return AdmissibilityReport(
        D=D,
        negative=D < 0,
        fundamental=is_fundamental(D),
        mod3=D % 3 == 1,
        mod5=D % 5 in (2, 3),
    )


@dataclass
class SelmerOptions:
    """
    Knobs for one verdict.

    Attributes:
        cross_check: Also compute C3A(D) from CM traces and require agreement
        with_lvalue: Compute L(E15 (x) D, 1) and the Sha statement
        precision: Window of the 3A series
        tolerance: Rounding budget for CM traces
        dps: mpmath working precision
        l_tolerance: Tail bound for the L-value
        sha_safety_factor: L is treated as nonzero when |L| > factor * tail
    """
    cross_check: bool = True
    with_lvalue: bool = False
    precision: int = DEFAULT_MT_PRECISION
    tolerance: float = DEFAULT_TOLERANCE
    dps: int = DEFAULT_DPS
    l_tolerance: float = 1e-8
    sha_safety_factor: float = 10.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cross_check": self.cross_check,
            "with_lvalue": self.with_lvalue,
            "precision": self.precision,
            "tolerance": self.tolerance,
            "dps": self.dps,
            "l_tolerance": self.l_tolerance,
            "sha_safety_factor": self.sha_safety_factor,
        }


@dataclass(frozen=True)
class ShaStatement:
    """
    The Sha clause: applies only with a certified nonzero L-value.

    Attributes:
        applies: Whether L(1) was certified nonzero
        mod5_divides: 5 | #Sha, set only when applies
    """
    applies: bool
    mod5_divides: Optional[bool] = None

    @classmethod
    def not_applicable(cls) -> "ShaStatement":
        return cls(False)

    def __str__(self) -> str:
        if not self.applies:
            return "NotApplicable"
        return f"Applies(mod5_divides={self.mod5_divides})"


def _flag(value: Any) -> bool:
    """Booleans as stored by JSON or read back from CSV text."""
    if isinstance(value, str):
        if value not in ("True", "False", "true", "false"):
            raise ValueError(f"Not a boolean field: {value!r}")
        return value in ("True", "true")
    return bool(value)


def _plain(value: Any) -> Any:
    """Unwrap numpy scalars that come back from pandas."""
    return value.item() if hasattr(value, "item") else value


@dataclass
class SelmerVerdict:
    """
    Outcome of the Selmer criterion at one discriminant.

    Attributes:
        D: Discriminant
        admissible: Whether the hypotheses hold
        h: Class number h(D)
        c3a_series: C3A(D) from the 3A series
        c3a_traces: C3A(D) from CM traces, if computed
        congruence: (C3A(D) + h(D)) mod 5
        sel5_nontrivial: Predicted Sel5(E15 (x) D) != 0
        l_twist: L(E15 (x) D, 1), if computed
        sha_statement: The Sha clause
        options: Options the verdict was computed with
    """
    D: int
    admissible: bool
    h: int
    c3a_series: int
    c3a_traces: Optional[int]
    congruence: int
    sel5_nontrivial: bool
    l_twist: Optional[LValueReport] = None
    sha_statement: ShaStatement = field(default_factory=ShaStatement.not_applicable)
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def congruence_value(self) -> int:
        return self.c3a_series + self.h

    def summary_line(self) -> str:
        """
        One-line text form.

        Example:
            D=-8 admissible; h=1; C3A=-188; C3A+h=-187 ≡ 3 (mod 5); Sel5 trivial
        """
        state = "nontrivial" if self.sel5_nontrivial else "trivial"
        return (
            f"D={self.D} admissible; h={self.h}; C3A={self.c3a_series}; "
            f"C3A+h={self.congruence_value} ≡ {self.congruence} (mod {SELMER_PRIME}); "
            f"Sel5 {state}"
        )

    def to_dict(self) -> Dict[str, Any]:
        """Flat record; big integers and floats as exact decimal strings."""
        return {
            "D": self.D,
            "admissible": self.admissible,
            "h": self.h,
            "c3a_series": str(self.c3a_series),
            "c3a_traces": None if self.c3a_traces is None else str(self.c3a_traces),
            "congruence": self.congruence,
            "sel5_nontrivial": self.sel5_nontrivial,
            "l_value": None if self.l_twist is None else repr(self.l_twist.value),
            "l_terms": None if self.l_twist is None else self.l_twist.terms_used,
            "l_sign": None if self.l_twist is None else self.l_twist.sign,
            "l_tail": None if self.l_twist is None else repr(self.l_twist.tail_estimate),
            "l_level": None if self.l_twist is None else self.l_twist.level,
            "sha_applies": self.sha_statement.applies,
            "sha_mod5_divides": self.sha_statement.mod5_divides,
            **{f"opt_{k}": v for k, v in self.options.items()},
        }

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "SelmerVerdict":
        l_twist = None
        if record.get("l_value") is not None:
            l_twist = LValueReport(
                value=float(record["l_value"]),
                terms_used=int(record["l_terms"]),
                sign=int(record["l_sign"]),
                tail_estimate=float(record["l_tail"]),
                level=int(record["l_level"]),
            )
        traces = record.get("c3a_traces")
        mod5 = record.get("sha_mod5_divides")
        return cls(
            D=int(record["D"]),
            admissible=_flag(record["admissible"]),
            h=int(record["h"]),
            c3a_series=int(record["c3a_series"]),
            c3a_traces=None if traces is None else int(traces),
            congruence=int(record["congruence"]),
            sel5_nontrivial=_flag(record["sel5_nontrivial"]),
            l_twist=l_twist,
            sha_statement=ShaStatement(_flag(record["sha_applies"]),
                                       None if mod5 is None else _flag(mod5)),
            options={k[4:]: _plain(v) for k, v in record.items() if k.startswith("opt_")},
        )


def selmer_criterion(D: int, opts: Optional[SelmerOptions] = None) -> SelmerVerdict:
    """
    Apply the Selmer criterion at D.

    Args:
        D: Admissible discriminant
        opts: Options (defaults if None)

    Returns:
        SelmerVerdict

    Raises:
        NotAdmissible: If D fails a hypothesis
        CrossCheckFailed: If the two routes to C3A(D) disagree

    Example:
        >>> selmer_criterion(-68).sel5_nontrivial
        True
    """
    opts = opts or SelmerOptions()
    report = admissible(D)
    if not report:
        raise NotAdmissible(f"D={D}: " + "; ".join(report.reasons()))

    h = class_number(D)
    c_series = c3a_coeff(D, opts.precision)
    c_traces = None
    if opts.cross_check:
        # c3a_via_traces raises CrossCheckFailed on disagreement
        c_traces = c3a_via_traces(D, opts.tolerance, opts.dps, cross_check=True, prec=opts.precision)

    congruence = (c_series + h) % SELMER_PRIME
    nontrivial = congruence == 0

    l_twist = None
    sha = ShaStatement.not_applicable()
    if opts.with_lvalue:
        l_twist = twisted_l_value(D, opts.l_tolerance)
        if l_twist.is_certified_nonzero(opts.sha_safety_factor):
            sha = ShaStatement(True, nontrivial)
        else:
            logger.info("D=%d: L-value %.3e not certified nonzero; Sha clause skipped", D, l_twist.value)

    logger.info("D=%d: h=%d C3A=%d congruence=%d", D, h, c_series, congruence)
    return SelmerVerdict(
        D=D,
        admissible=True,
        h=h,
        c3a_series=c_series,
        c3a_traces=c_traces,
        congruence=congruence,
        sel5_nontrivial=nontrivial,
        l_twist=l_twist,
        sha_statement=sha,
        options=opts.to_dict(),
    )


def g15_coeff(D: int) -> int:
    """
    Attested coefficient C15(D) of G15.

    Raises:
        UnknownCoefficient: For D outside the table
    """
    if D not in G15_TABLE:
        raise UnknownCoefficient(
            f"C15({D}) is not attested; known for D in {sorted(G15_TABLE)}"
        )
    return G15_TABLE[D]
