"""
Named modular functions and the O'Nan 3A McKay-Thompson series.
"""

from .named_series import (
    NamedSeries,
    SeriesId,
    SERIES_IDS,
    KNOWN_COEFFICIENTS,
    j_series,
    t3_series,
    t6_series,
    fon_series,
    fon3a_series,
    f15_series,
    hurwitz_series,
    theta0_series,
    theta1_series,
    named_series,
)

from .thompson import (
    VectorPair,
    DEFAULT_MT_PRECISION,
    mt_3a_system,
    fon_mt_3a,
    system_residuals,
    c3a_coeff,
    vector_check,
)

__all__ = [
    # named_series
    "NamedSeries",
    "SeriesId",
    "SERIES_IDS",
    "KNOWN_COEFFICIENTS",
    "j_series",
    "t3_series",
    "t6_series",
    "fon_series",
    "fon3a_series",
    "f15_series",
    "hurwitz_series",
    "theta0_series",
    "theta1_series",
    "named_series",
    # thompson
    "VectorPair",
    "DEFAULT_MT_PRECISION",
    "mt_3a_system",
    "fon_mt_3a",
    "system_residuals",
    "c3a_coeff",
    "vector_check",
]
