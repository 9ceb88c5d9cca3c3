"""
Exact truncated q-series with fractional exponents.
"""

from .frac_series import (
    FracSeries,
    Coefficient,
    Exponent,
)

from .constructors import (
    eta_character,
    eta_series,
    eta_product_form,
    eta_quotient,
    theta_r,
    theta1_mr,
    theta_check,
)

__all__ = [
    # frac_series
    "FracSeries",
    "Coefficient",
    "Exponent",
    # constructors
    "eta_character",
    "eta_series",
    "eta_product_form",
    "eta_quotient",
    "theta_r",
    "theta1_mr",
    "theta_check",
]
