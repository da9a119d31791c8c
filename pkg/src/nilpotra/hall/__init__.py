"""Basic commutators, the Hall order and Hall bases."""

from typing import List

from nilpotra.hall.basis import HallBasis, build_hall_basis, witt_count
from nilpotra.hall.commutator import CommutatorTree, HallOrder, is_basic, nu

__all__: List[str] = [
    "CommutatorTree",
    "HallBasis",
    "HallOrder",
    "build_hall_basis",
    "is_basic",
    "nu",
    "witt_count",
]
