#!/usr/bin/env python3
"""
O'Nan Moonshine Toolkit - Main Entry Point

Usage:
    python main.py [--config CONFIG_FILE] [--format text|json] [-v] COMMAND ...

Example:
    python main.py qexp --fn J --prec 4
    python main.py classnum -D -68
    python main.py trace --fn FON -D -7
    python main.py selmer -D -68 --with-lvalue
    python main.py scan --from -500 --to -1 --out results.jsonl
"""

import argparse
from dataclasses import asdict
import json
import logging
from pathlib import Path
import sys
from typing import Any, Dict, List, Optional

# Add package to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from onan_moonshine.config import load_config, selmer_options_from_config, scan_config_from_config
from onan_moonshine.modular import SERIES_IDS, named_series, fon_mt_3a, system_residuals
from onan_moonshine.forms import enumerate_reduced, class_number, hurwitz_number
from onan_moonshine.cm import trace, twisted_trace, check_all_identities, check_identity, FUNCTION_LEVELS
from onan_moonshine.curves import (
    E15_MINIMAL,
    twist14,
    twist15,
    a_p_table,
    torsion_subgroup,
    j_invariant,
)
from onan_moonshine.lfunctions import (
    F15_LEVEL,
    F15_SIGN,
    a_coeffs,
    l_value_at_1,
    modularity_check,
    terms_needed,
    twisted_l_value,
)
from onan_moonshine.selmer import selmer_criterion, run_scan
from onan_moonshine.evaluation import (
    generate_verdict_report,
    generate_scan_summary,
    generate_class_report,
    generate_identity_report,
    generate_curve_report,
    generate_lvalue_report,
    generate_modularity_table,
)

logger = logging.getLogger("onan_moonshine")

VERBOSITY_LEVELS = {0: logging.CRITICAL, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}

# command-line dest -> (config section, key)
FLAG_OVERRIDES = {
    "tolerance": ("numerics", "tolerance"),
    "dps": ("numerics", "mp_dps"),
    "prime_bound": ("elliptic", "prime_bound"),
    "precision": ("series", "mt_precision"),
    "tol": ("lfunction", "tolerance"),
}


def _apply_flags(args: argparse.Namespace, config: Dict[str, Any]) -> None:
    for dest, (section, key) in FLAG_OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            config[section][key] = value


def _settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Effective numerical settings, echoed into every JSON record."""
    return {
        "default_precision": config["series"]["default_precision"],
        "mt_precision": config["series"]["mt_precision"],
        "tolerance": config["numerics"]["tolerance"],
        "dps": config["numerics"]["mp_dps"],
        "twisted_trace_sign": config["numerics"]["twisted_trace_sign"],
        "prime_bound": config["elliptic"]["prime_bound"],
        "torsion_order_cap": config["elliptic"]["torsion_order_cap"],
        "l_tolerance": config["lfunction"]["tolerance"],
    }


def _emit(args: argparse.Namespace, config: Dict[str, Any], text: str, record: Dict[str, Any]) -> None:
    if args.format == "json":
        print(json.dumps({**record, "settings": _settings(config)}, default=str))
    else:
        print(text)


def _int_list(raw: str) -> List[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def cmd_qexp(args, config) -> int:
    prec = args.prec if args.prec is not None else config["series"]["default_precision"]
    ns = named_series(args.fn, prec)
    record = {
        "id": ns.id,
        "level": ns.level,
        "weight": str(ns.weight),
        "precision": str(ns.series.precision),
        "coefficients": {str(e): str(c) for e, c in ns.series.terms()},
    }
    _emit(args, config, str(ns), record)
    return 0


def cmd_classnum(args, config) -> int:
    classes = enumerate_reduced(args.D)
    h = class_number(args.D)
    H = hurwitz_number(args.D) if args.hurwitz else None
    if args.forms:
        text = generate_class_report(classes, h, H)
    else:
        text = f"h({args.D})={h}" + (f"\nH({-args.D})={H}" if H is not None else "")
    record = {
        "D": args.D,
        "h": h,
        "hurwitz": None if H is None else str(H),
        "forms": [form.as_tuple() for form in classes.reps],
    }
    _emit(args, config, text, record)
    return 0


def cmd_trace(args, config) -> int:
    tolerance = config["numerics"]["tolerance"]
    dps = config["numerics"]["mp_dps"]
    N = args.level if args.level is not None else FUNCTION_LEVELS.get(args.fn.upper(), 1)
    if args.twist is not None:
        report = twisted_trace(
            args.fn, args.D, args.twist, N=N, r=args.residue,
            sign=config["numerics"]["twisted_trace_sign"],
            tolerance=tolerance, dps=dps,
        )
        label = f"tr_{N}({args.fn}|{args.D}, chi_{args.twist})"
    else:
        report = trace(args.fn, N, args.D, tolerance, dps)
        label = f"tr_{N}({args.fn}|{args.D})"
    if report.rounded is not None:
        text = f"{label} = {report.rounded}"
    else:
        text = f"{label} ~ {report.real:.12g} + {report.imag:.3g}i (error <= {float(report.tail_bound):.2e})"
    _emit(args, config, text, {"label": label, **report.to_dict()})
    return 0 if report.rounded is not None else 1


def cmd_mt_series(args, config) -> int:
    prec = args.prec if args.prec is not None else config["series"]["mt_precision"]
    pair = fon_mt_3a(prec)
    residuals = system_residuals(pair, prec)
    solved = all(c == 0 for residual in residuals for _, c in residual.terms())
    text = "\n".join([
        f"F_3A,0 = {pair.comp0}",
        f"F_3A,1 = {pair.comp1}",
        f"residuals vanish: {solved}",
    ])
    record = {
        "class": args.mt_class,
        "precision": prec,
        "comp0": {str(e): str(c) for e, c in pair.comp0.terms()},
        "comp1": {str(e): str(c) for e, c in pair.comp1.terms()},
        "residuals_vanish": solved,
    }
    _emit(args, config, text, record)
    return 0 if solved else 1


def cmd_curve(args, config) -> int:
    build = twist15 if args.family == "E15" else twist14
    curve = build(args.twist)
    label = f"{args.family} x {args.twist}"
    elliptic = config["elliptic"]

    a_values = None
    if args.ap:
        on_minimal = args.family == "E15" and args.twist == 1 and not args.short_model
        target = E15_MINIMAL if on_minimal else curve
        a_values = a_p_table(
            target, args.ap,
            prime_bound=elliptic["prime_bound"],
            enumeration_cutoff=elliptic["enumeration_cutoff"],
        )
    torsion = torsion_subgroup(curve, elliptic["torsion_order_cap"]) if args.torsion else None

    record = {
        "family": args.family,
        "twist": args.twist,
        "coefficients": list(curve.coefficients),
        "discriminant": str(curve.discriminant),
        "j_invariant": str(j_invariant(curve)),
        "a_p": a_values,
        "a_p_model": None if a_values is None else list(target.coefficients),
        "torsion": torsion,
    }
    _emit(args, config, generate_curve_report(label, curve, a_values, torsion), record)
    return 0


def cmd_lvalue(args, config) -> int:
    tol = config["lfunction"]["tolerance"]
    if args.twist is not None:
        report = twisted_l_value(args.twist, tol)
        label = f"L(E15 x {args.twist}, 1)"
    else:
        M = terms_needed(F15_LEVEL, tol)
        report = l_value_at_1(a_coeffs(M + 1, cross_check=True), F15_LEVEL, F15_SIGN, tol)
        label = "L(E15, 1)"
    text = generate_lvalue_report(label, report)
    record = {"label": label, **report.to_dict()}
    if args.modularity:
        rows = modularity_check(E15_MINIMAL, a_coeffs(args.modularity), args.modularity)
        text += "\n" + generate_modularity_table(rows)
        record["modularity"] = [asdict(row) for row in rows]
        if any(not row.match and not row.bad for row in rows):
            _emit(args, config, text, record)
            return 1
    _emit(args, config, text, record)
    return 0


def cmd_selmer(args, config) -> int:
    opts = selmer_options_from_config(
        config,
        with_lvalue=True if args.with_lvalue else None,
        cross_check=False if args.no_cross_check else None,
        precision=args.precision,
    )
    verdict = selmer_criterion(args.D, opts)
    text = generate_verdict_report(verdict) if args.report else verdict.summary_line()
    _emit(args, config, text, verdict.to_dict())
    return 0


def cmd_scan(args, config) -> int:
    opts = selmer_options_from_config(
        config,
        with_lvalue=True if args.with_lvalue else None,
        cross_check=False if args.no_cross_check else None,
    )
    scan_config = scan_config_from_config(
        config, args.D_min, args.D_max, opts,
        num_workers=args.workers,
        output_file=args.out,
        resume=False if args.no_resume else None,
    )
    logger.info("Starting %r", scan_config)
    verdicts = run_scan(scan_config)
    if args.format == "json":
        for verdict in verdicts:
            print(json.dumps({**verdict.to_dict(), "settings": _settings(config)}, default=str))
    else:
        print(generate_scan_summary(verdicts))
    return 0


def cmd_identities(args, config) -> int:
    tolerance = config["numerics"]["tolerance"]
    dps = config["numerics"]["mp_dps"]
    if args.name:
        checks = [check_identity(args.name, tolerance, dps)]
    else:
        checks = check_all_identities(tolerance, dps)
    record = {"checks": [vars(check) for check in checks]}
    _emit(args, config, generate_identity_report(checks), record)
    return 0 if all(check.passed for check in checks) else 1


def _add_numeric_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", dest="tolerance", type=float, default=None,
                   help="Tail tolerance of the trace sums (default: numerics.tolerance)")
    p.add_argument("--dps", type=int, default=None,
                   help="mpmath working precision (default: numerics.mp_dps)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="O'Nan moonshine and 5-Selmer groups of twists of E15"
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to configuration file (default: config/settings.yaml)"
    )
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default=None,
        help="Output format (default: output.format from the config)"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="Raise log verbosity (repeatable)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qexp", help="Exact q-expansion of a named series")
    p.add_argument("--fn", required=True, type=str.upper, choices=SERIES_IDS)
    p.add_argument("--prec", type=int, default=None, help="Expand to O(q^prec)")
    p.set_defaults(handler=cmd_qexp)

    p = sub.add_parser("classnum", help="Class number and reduced forms")
    p.add_argument("-D", dest="D", type=int, required=True)
    p.add_argument("--hurwitz", action="store_true", help="Also print the Hurwitz class number")
    p.add_argument("--forms", action="store_true", help="List the reduced forms")
    p.set_defaults(handler=cmd_classnum)

    p = sub.add_parser("trace", help="Trace of singular moduli, optionally twisted")
    p.add_argument("--fn", required=True, type=str.upper, choices=sorted(FUNCTION_LEVELS))
    p.add_argument("-D", dest="D", type=int, required=True)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--twist", type=int, default=None, help="Fundamental discriminant D0 of the genus character")
    p.add_argument("--residue", type=int, default=None, help="r with r^2 = D mod 4N")
    _add_numeric_flags(p)
    p.set_defaults(handler=cmd_trace)

    p = sub.add_parser("mt-series", help="McKay-Thompson series of the O'Nan group")
    p.add_argument("--class", dest="mt_class", choices=["3A"], default="3A")
    p.add_argument("--prec", type=int, default=None)
    p.set_defaults(handler=cmd_mt_series)

    p = sub.add_parser("curve", help="Twist of E15 or E14 with invariants")
    p.add_argument("--family", choices=["E15", "E14"], default="E15")
    p.add_argument("--twist", type=int, default=1)
    p.add_argument("--ap", type=_int_list, default=None,
                   help="Comma-separated primes; E15 uses its minimal model, twists their short model")
    p.add_argument("--torsion", action="store_true")
    p.add_argument("--short-model", action="store_true",
                   help="For E15 itself, count on the short model instead of the minimal one")
    p.add_argument("--prime-bound", type=int, default=None,
                   help="Largest prime accepted by --ap (default: elliptic.prime_bound)")
    p.set_defaults(handler=cmd_curve)

    p = sub.add_parser("lvalue", help="Central L-value of E15 or a twist")
    p.add_argument("--family", choices=["E15"], default="E15")
    p.add_argument("--twist", type=int, default=None)
    p.add_argument("--tol", type=float, default=None,
                   help="Truncation tolerance of the L-series (default: lfunction.tolerance)")
    p.add_argument("--modularity", type=int, default=None, metavar="P_MAX",
                   help="Also compare a_E(p) with a_f(p) for p <= P_MAX")
    p.set_defaults(handler=cmd_lvalue)

    p = sub.add_parser("selmer", help="Selmer criterion at one discriminant")
    p.add_argument("-D", dest="D", type=int, required=True)
    p.add_argument("--with-lvalue", action="store_true")
    p.add_argument("--no-cross-check", action="store_true")
    _add_numeric_flags(p)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--report", action="store_true", help="Print the full text report")
    p.set_defaults(handler=cmd_selmer)

    p = sub.add_parser("scan", help="Selmer criterion over a range of discriminants")
    p.add_argument("--from", dest="D_min", type=int, required=True)
    p.add_argument("--to", dest="D_max", type=int, default=-1)
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--with-lvalue", action="store_true")
    p.add_argument("--no-cross-check", action="store_true")
    p.add_argument("--no-resume", action="store_true")
    p.add_argument("--precision", type=int, default=None)
    _add_numeric_flags(p)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("identities", help="Check the singular-modulus identities")
    p.add_argument("--name", type=str, default=None)
    _add_numeric_flags(p)
    p.set_defaults(handler=cmd_identities)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, dispatch, and return the exit code.

    0 on success, 1 on a computational error, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = load_config(args.config)
    except (FileNotFoundError, ValueError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2

    _apply_flags(args, config)

    verbosity = min(config["output"]["verbosity"] + args.verbose, 3)
    logging.basicConfig(
        level=VERBOSITY_LEVELS[max(verbosity, 0)],
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    if args.format is None:
        args.format = config["output"]["format"]

    try:
        return args.handler(args, config)
    except ValueError as exc:
        # MoonshineError and bad parameters alike
        print(f"Error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
