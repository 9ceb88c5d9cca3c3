"""
L-values of f15 and its quadratic twists.
"""

from .special_values import (
    LValueReport,
    ModularityRow,
    F15_LEVEL,
    F15_SIGN,
    eta_product_coefficients,
    a_coeffs,
    terms_needed,
    l_value_at_1,
    twist_sign,
    twisted_coefficients,
    twisted_l_value,
    modularity_check,
)

__all__ = [
    "LValueReport",
    "ModularityRow",
    "F15_LEVEL",
    "F15_SIGN",
    "eta_product_coefficients",
    "a_coeffs",
    "terms_needed",
    "l_value_at_1",
    "twist_sign",
    "twisted_coefficients",
    "twisted_l_value",
    "modularity_check",
]
