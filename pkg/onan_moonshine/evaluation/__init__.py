"""
Text reports for verdicts, scans and supporting computations.
"""

from .reports import (
    generate_verdict_report,
    generate_scan_summary,
    print_verdict_report,
    generate_class_report,
    generate_identity_report,
    generate_curve_report,
    generate_lvalue_report,
    generate_modularity_table,
)

__all__ = [
    "generate_verdict_report",
    "generate_scan_summary",
    "print_verdict_report",
    "generate_class_report",
    "generate_identity_report",
    "generate_curve_report",
    "generate_lvalue_report",
    "generate_modularity_table",
]
