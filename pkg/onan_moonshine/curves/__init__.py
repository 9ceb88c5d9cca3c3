"""
Elliptic curves over Q: models, rational points, point counts.
"""

from .weierstrass import (
    WeierstrassCurve,
    discriminant,
    j_invariant,
    twist15,
    twist14,
    E15_MINIMAL,
    E15_X_SUBSTITUTION,
    E15_Y_SUBSTITUTION,
    E15_DIVISOR,
    verify_minimal_substitution,
)

from .points import (
    RationalPoint,
    INFINITY,
    is_on_curve,
    point_negate,
    point_add,
    point_multiply,
    point_order,
    plausibly_infinite_order,
    torsion_points,
    torsion_subgroup,
)

from .counting import (
    CountMethod,
    legendre_table,
    count_points_mod_p,
    a_p,
    a_p_table,
    satisfies_hasse,
)

__all__ = [
    # weierstrass
    "WeierstrassCurve",
    "discriminant",
    "j_invariant",
    "twist15",
    "twist14",
    "E15_MINIMAL",
    "E15_X_SUBSTITUTION",
    "E15_Y_SUBSTITUTION",
    "E15_DIVISOR",
    "verify_minimal_substitution",
    # points
    "RationalPoint",
    "INFINITY",
    "is_on_curve",
    "point_negate",
    "point_add",
    "point_multiply",
    "point_order",
    "plausibly_infinite_order",
    "torsion_points",
    "torsion_subgroup",
    # counting
    "CountMethod",
    "legendre_table",
    "count_points_mod_p",
    "a_p",
    "a_p_table",
    "satisfies_hasse",
]
