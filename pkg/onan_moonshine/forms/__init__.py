"""
Binary quadratic forms, class numbers and genus characters.
"""

from .quadratic_forms import (
    QuadForm,
    CMPoint,
    apply_sl2,
    reduce,
    tau_of,
)

from .characters import (
    kronecker,
    is_squarefree,
    is_discriminant,
    is_fundamental,
    represented_values_coprime_to,
    genus_char,
)

from .classes import (
    ClassList,
    LevelRep,
    check_discriminant,
    stabilizer_weight,
    enumerate_reduced,
    class_number,
    hurwitz_number,
    square_roots_mod,
    level_reps,
    level_class_count,
)

__all__ = [
    # quadratic_forms
    "QuadForm",
    "CMPoint",
    "apply_sl2",
    "reduce",
    "tau_of",
    # characters
    "kronecker",
    "is_squarefree",
    "is_discriminant",
    "is_fundamental",
    "represented_values_coprime_to",
    "genus_char",
    # classes
    "ClassList",
    "LevelRep",
    "check_discriminant",
    "stabilizer_weight",
    "enumerate_reduced",
    "class_number",
    "hurwitz_number",
    "square_roots_mod",
    "level_reps",
    "level_class_count",
]
