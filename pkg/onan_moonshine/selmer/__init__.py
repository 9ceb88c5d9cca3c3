"""
Selmer criterion for the twists E15 (x) D and discriminant scans.
"""

from .criterion import (
    SELMER_PRIME,
    G15_TABLE,
    AdmissibilityReport,
    SelmerOptions,
    ShaStatement,
    SelmerVerdict,
    admissible,
    selmer_criterion,
    g15_coeff,
)

from .scanner import (
    ScanConfig,
    admissible_range,
    scan,
    run_scan,
    append_result,
    save_results,
    load_results,
    load_completed,
)

__all__ = [
    # criterion
    "SELMER_PRIME",
    "G15_TABLE",
    "AdmissibilityReport",
    "SelmerOptions",
    "ShaStatement",
    "SelmerVerdict",
    "admissible",
    "selmer_criterion",
    "g15_coeff",
    # scanner
    "ScanConfig",
    "admissible_range",
    "scan",
    "run_scan",
    "append_result",
    "save_results",
    "load_results",
    "load_completed",
]
