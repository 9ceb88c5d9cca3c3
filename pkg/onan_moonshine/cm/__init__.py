"""
CM values and traces of singular moduli.
"""

from .values import (
    CMValueReport,
    QuadraticValue,
    NUMERIC_IDS,
    eta_terms_needed,
    eta_numeric,
    fn_numeric,
    round_rational,
    round_quadratic,
)

from .traces import (
    FUNCTION_LEVELS,
    DEFAULT_TWISTED_SIGN,
    IdentityCheck,
    SINGULAR_IDENTITIES,
    trace,
    twist_sign,
    twisted_trace,
    c3a_via_traces,
    trace_series,
    thompson_q5_check,
    check_identity,
    check_all_identities,
)

__all__ = [
    # values
    "CMValueReport",
    "QuadraticValue",
    "NUMERIC_IDS",
    "eta_terms_needed",
    "eta_numeric",
    "fn_numeric",
    "round_rational",
    "round_quadratic",
    # traces
    "FUNCTION_LEVELS",
    "DEFAULT_TWISTED_SIGN",
    "IdentityCheck",
    "SINGULAR_IDENTITIES",
    "trace",
    "twist_sign",
    "twisted_trace",
    "c3a_via_traces",
    "trace_series",
    "thompson_q5_check",
    "check_identity",
    "check_all_identities",
]
