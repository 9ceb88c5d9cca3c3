"""
Report Generation

Human-readable text blocks for verdicts, scans, identity checks and
curve data.
"""

from typing import Dict, List, Optional, Sequence

from ..cm.traces import IdentityCheck
from ..curves.weierstrass import WeierstrassCurve, j_invariant
from ..forms.classes import ClassList
from ..lfunctions.special_values import LValueReport, ModularityRow
from ..selmer.criterion import SELMER_PRIME, SelmerVerdict

RULE = "=" * 70
SUBRULE = "-" * 70


def generate_verdict_report(verdict: SelmerVerdict) -> str:
    """
    Text report for one Selmer verdict.

    Args:
        verdict: Result of selmer_criterion

    Returns:
        Formatted string report
    """
    report_lines = []

    report_lines.append(RULE)
    report_lines.append(f"SELMER CRITERION - E15 TWISTED BY D = {verdict.D}")
    report_lines.append(RULE)
    report_lines.append("")

    report_lines.append("INVARIANTS")
    report_lines.append(SUBRULE)
    report_lines.append(f"Class Number h(D):    {verdict.h}")
    report_lines.append(f"C3A(D) (series):      {verdict.c3a_series}")
    if verdict.c3a_traces is None:
        report_lines.append("C3A(D) (CM traces):   not computed")
    else:
        report_lines.append(f"C3A(D) (CM traces):   {verdict.c3a_traces}")
    report_lines.append(f"C3A(D) + h(D):        {verdict.congruence_value}")
    report_lines.append(f"Residue mod {SELMER_PRIME}:         {verdict.congruence}")
    report_lines.append("")

    report_lines.append("CONCLUSION")
    report_lines.append(SUBRULE)
    state = "NONTRIVIAL" if verdict.sel5_nontrivial else "TRIVIAL"
    report_lines.append(f"Sel5(E15 x {verdict.D}):     {state}")
    if verdict.l_twist is not None:
        report_lines.append(f"L(E15 x {verdict.D}, 1):    {verdict.l_twist.value:.10f}")
        report_lines.append(f"  tail bound:         {verdict.l_twist.tail_estimate:.2e}")
        report_lines.append(f"  terms / sign:       {verdict.l_twist.terms_used} / {verdict.l_twist.sign:+d}")
    report_lines.append(f"Sha clause:           {verdict.sha_statement}")
    report_lines.append("")

    report_lines.append(RULE)
    report_lines.append(verdict.summary_line())
    return "\n".join(report_lines)


def generate_scan_summary(verdicts: Sequence[SelmerVerdict]) -> str:
    """
    Summary of a scan: counts, cross-check status and the nontrivial list.

    Args:
        verdicts: Verdicts from run_scan

    Returns:
        Formatted string report
    """
    report_lines = []
    report_lines.append(RULE)
    report_lines.append("SELMER SCAN SUMMARY")
    report_lines.append(RULE)

    if not verdicts:
        report_lines.append("No admissible discriminants in range")
        report_lines.append(RULE)
        return "\n".join(report_lines)

    nontrivial = [v for v in verdicts if v.sel5_nontrivial]
    checked = [v for v in verdicts if v.c3a_traces is not None]
    agreeing = [v for v in checked if v.c3a_traces == v.c3a_series]
    with_sha = [v for v in verdicts if v.sha_statement.applies]
    D_values = [v.D for v in verdicts]

    report_lines.append(f"Range:                [{min(D_values)}, {max(D_values)}]")
    report_lines.append(f"Admissible D:         {len(verdicts):,}")
    report_lines.append(f"Sel5 nontrivial:      {len(nontrivial):,} "
                        f"({len(nontrivial) / len(verdicts) * 100:.1f}%)")
    report_lines.append(f"Cross-checked:        {len(checked):,} ({len(agreeing):,} agree)")
    if with_sha:
        divides = sum(1 for v in with_sha if v.sha_statement.mod5_divides)
        report_lines.append(f"Sha clause applies:   {len(with_sha):,} ({divides:,} with 5 | #Sha)")
    report_lines.append("")

    report_lines.append(f"{'D':>8} {'h':>6} {'C3A+h mod 5':>12} {'Sel5':>12}")
    report_lines.append(SUBRULE)
    for v in verdicts:
        state = "nontrivial" if v.sel5_nontrivial else "trivial"
        report_lines.append(f"{v.D:>8} {v.h:>6} {v.congruence:>12} {state:>12}")
    report_lines.append(RULE)
    return "\n".join(report_lines)


def print_verdict_report(verdict: SelmerVerdict) -> None:
    print(generate_verdict_report(verdict))


def generate_class_report(classes: ClassList, h: int, hurwitz: Optional[object] = None) -> str:
    """Reduced forms of one discriminant with their weights."""
    report_lines = [f"h({classes.D})={h}"]
    if hurwitz is not None:
        report_lines.append(f"H({-classes.D})={hurwitz}")
    for form, weight in zip(classes.reps, classes.weights):
        tag = "" if form.is_primitive() else "  (imprimitive)"
        report_lines.append(f"  {str(form):<20} weight {weight}{tag}")
    return "\n".join(report_lines)


def generate_identity_report(checks: List[IdentityCheck]) -> str:
    """Table of singular-modulus identity checks."""
    report_lines = []
    report_lines.append(RULE)
    report_lines.append("SINGULAR MODULUS IDENTITIES")
    report_lines.append(RULE)
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        report_lines.append(f"[{status}] {check.name}")
        report_lines.append(f"       {check.description}")
        report_lines.append(f"       computed {check.computed}  (error {check.error:.2e})")
    report_lines.append(SUBRULE)
    passed = sum(1 for c in checks if c.passed)
    report_lines.append(f"{passed}/{len(checks)} identities hold")
    return "\n".join(report_lines)


def generate_curve_report(
    label: str,
    curve: WeierstrassCurve,
    a_values: Optional[Dict[int, int]] = None,
    torsion: Optional[List[int]] = None
) -> str:
    """Equation, invariants and optional a_p / torsion data of one curve."""
    report_lines = []
    report_lines.append(label)
    report_lines.append(SUBRULE)
    report_lines.append(f"Equation:       {curve}")
    report_lines.append(f"Discriminant:   {curve.discriminant}")
    report_lines.append(f"j-invariant:    {j_invariant(curve)}")
    if a_values:
        listed = ", ".join(f"a_{p}={a}" for p, a in a_values.items())
        report_lines.append(f"Traces:         {listed}")
    if torsion is not None:
        structure = " x ".join(f"Z/{n}" for n in torsion) if torsion != [1] else "trivial"
        report_lines.append(f"Torsion:        {structure}")
    return "\n".join(report_lines)


def generate_lvalue_report(label: str, report: LValueReport) -> str:
    certified = "yes" if report.is_certified_nonzero() else "no"
    return "\n".join([
        f"{label} = {report.value:.10f}",
        f"  level {report.level}, sign {report.sign:+d}, {report.terms_used} terms, "
        f"tail <= {report.tail_estimate:.2e}, certified nonzero: {certified}",
    ])


def generate_modularity_table(rows: List[ModularityRow]) -> str:
    report_lines = [f"{'p':>6} {'a_E(p)':>8} {'a_f(p)':>8}  status"]
    for row in rows:
        status = "ok" if row.match else ("bad prime" if row.bad else "MISMATCH")
        report_lines.append(f"{row.p:>6} {row.a_curve:>8} {row.a_form:>8}  {status}")
    return "\n".join(report_lines)
