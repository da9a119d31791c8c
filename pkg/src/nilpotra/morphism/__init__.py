"""Endomorphisms, automorphisms and their integer abelianizations."""

from typing import List

from nilpotra.morphism.endomorphism import (
    Endomorphism,
    abelianization_matrix,
    apply,
    automorphism_commutator,
    compose,
    conjugate,
    ia_automorphism,
    ia_level,
    inner,
    invert,
    is_automorphism,
    is_primitive,
    lift,
    permutation,
    power,
    primitive_witness,
    project,
)
from nilpotra.morphism.integer_matrix import (
    IntegerMatrix,
    complete_unimodular,
    integer_inverse,
    is_unimodular,
    random_unimodular,
)

__all__: List[str] = [
    "Endomorphism",
    "IntegerMatrix",
    "abelianization_matrix",
    "apply",
    "automorphism_commutator",
    "complete_unimodular",
    "compose",
    "conjugate",
    "ia_automorphism",
    "ia_level",
    "inner",
    "integer_inverse",
    "invert",
    "is_automorphism",
    "is_primitive",
    "is_unimodular",
    "lift",
    "permutation",
    "power",
    "primitive_witness",
    "project",
    "random_unimodular",
]
