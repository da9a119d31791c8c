"""Arithmetic in the free nilpotent groups F_{n,c}."""

from typing import List

from nilpotra.group.context import GroupContext
from nilpotra.group.element import (
    NilpotentElement,
    collect,
    commutator,
    inv,
    is_central,
    mul,
    power,
    weight_filtration,
)
from nilpotra.group.series import TruncatedSeries
from nilpotra.group.unitriangular import UnitriangularRepresentation

__all__: List[str] = [
    "GroupContext",
    "NilpotentElement",
    "TruncatedSeries",
    "UnitriangularRepresentation",
    "collect",
    "commutator",
    "inv",
    "is_central",
    "mul",
    "power",
    "weight_filtration",
]
