"""Elements of F_{n,c} in Hall normal form and the group operations on them."""

from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

from nilpotra.errors import ContextMismatchError
from nilpotra.group.context import GroupContext
from nilpotra.group.series import TruncatedSeries
from nilpotra.hall.commutator import CommutatorTree
from nilpotra.word.word import Word


class NilpotentElement:
    """An element ``prod b_i ** e_i`` over the Hall basis, in basis order.

    ``coords`` maps basis positions to nonzero exponents. Elements are
    immutable; the power series image is computed on first use.
    """

    __slots__ = ("ctx", "_coords", "_series")

    ctx: GroupContext
    _coords: Dict[int, int]
    _series: Optional[TruncatedSeries]

    def __init__(self, ctx: GroupContext, coords: Optional[Mapping[int, int]] = None) -> None:
        self.ctx = ctx
        self._coords = {}
        for pos, exp in sorted((coords or {}).items()):
            if not 0 <= pos < len(ctx.basis):
                raise IndexError(f"basis position {pos} out of range for {ctx}")
            if exp:
                self._coords[pos] = int(exp)
        self._series = None

    # constructors

    @classmethod
    def identity(cls, ctx: GroupContext) -> "NilpotentElement":
        return cls(ctx)

    @classmethod
    def generator(cls, ctx: GroupContext, index: int, exp: int = 1) -> "NilpotentElement":
        """x_index ** exp."""
        return cls(ctx, {ctx.basis.position(CommutatorTree.leaf(index)): exp})

    @classmethod
    def basis_element(cls, ctx: GroupContext, pos: int, exp: int = 1) -> "NilpotentElement":
        return cls(ctx, {pos: exp})

    @classmethod
    def from_series(cls, ctx: GroupContext, series: TruncatedSeries) -> "NilpotentElement":
        element = cls(ctx, ctx.coordinates(series))
        element._series = series
        return element

    # accessors

    @property
    def coords(self) -> Mapping[int, int]:
        return MappingProxyType(self._coords)

    @property
    def series(self) -> TruncatedSeries:
        if self._series is None:
            self._series = self.ctx.coords_series(self._coords)
        return self._series

    def coordinate(self, key: Union[int, str, CommutatorTree]) -> int:
        """Exponent at a basis position, commutator label or basic tree."""
        if isinstance(key, CommutatorTree):
            pos = self.ctx.basis.position(key)
        elif isinstance(key, str):
            pos = self.ctx.basis.position_of_label(key)
        else:
            pos = key
        return self._coords.get(pos, 0)

    def is_identity(self) -> bool:
        return not self._coords

    def weight_filtration(self) -> int:
        """Largest k with self in N_k; c+1 for the identity."""
        if not self._coords:
            return self.ctx.nclass + 1
        return min(self.ctx.basis.weight_of(pos) for pos in self._coords)

    def is_central(self) -> bool:
        return all(
            commutator(self, NilpotentElement.generator(self.ctx, i)).is_identity()
            for i in range(1, self.ctx.rank + 1)
        )

    def to_word(self) -> Word:
        """The normal form written out as a word."""
        word = Word()
        for pos, exp in self._coords.items():
            word = word * self.ctx.basis[pos].to_word() ** exp
        return word

    # group operations

    def _same_context(self, other: "NilpotentElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"{self.ctx} and {other.ctx} differ")

    def __mul__(self, other: "NilpotentElement") -> "NilpotentElement":
        if not isinstance(other, NilpotentElement):
            return NotImplemented
        self._same_context(other)
        if self.is_identity():
            return other
        if other.is_identity():
            return self
        return NilpotentElement.from_series(self.ctx, self.ctx.checked(self.series * other.series))

    def inverse(self) -> "NilpotentElement":
        if self.is_identity():
            return self
        return NilpotentElement.from_series(self.ctx, self.series.inverse())

    def __invert__(self) -> "NilpotentElement":
        return self.inverse()

    def __pow__(self, k: int) -> "NilpotentElement":
        if k == 0 or self.is_identity():
            return NilpotentElement.identity(self.ctx)
        if k == 1:
            return self
        if len(self._coords) == 1:
            ((pos, exp),) = self._coords.items()
            return NilpotentElement(self.ctx, {pos: exp * k})
        return NilpotentElement.from_series(self.ctx, self.ctx.checked(self.series.power(k)))

    # python protocol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NilpotentElement):
            return NotImplemented
        return self.ctx == other.ctx and self._coords == other._coords

    def __hash__(self) -> int:
        return hash((self.ctx, tuple(self._coords.items())))

    def __str__(self) -> str:
        if not self._coords:
            return "1"
        parts = []
        for pos, exp in self._coords.items():
            label = str(self.ctx.basis[pos])
            parts.append(label if exp == 1 else f"{label}^{exp}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NilpotentElement({self}, n={self.ctx.rank}, c={self.ctx.nclass})"

    # serialization

    def toDict(self) -> Dict[str, Any]:
        return {
            "rank": self.ctx.rank,
            "class": self.ctx.nclass,
            "coords": [
                {
                    "commutator": str(self.ctx.basis[pos]),
                    "weight": self.ctx.basis.weight_of(pos),
                    "exp": str(exp),
                }
                for pos, exp in self._coords.items()
            ],
        }

    @classmethod
    def fromDict(
        cls, d: Mapping[str, Any], ctx: Optional[GroupContext] = None
    ) -> "NilpotentElement":
        if ctx is None:
            ctx = GroupContext.get(int(d["rank"]), int(d["class"]))
        elif (ctx.rank, ctx.nclass) != (int(d["rank"]), int(d["class"])):
            raise ContextMismatchError(f"data for F_{{{d['rank']},{d['class']}}} given {ctx}")
        coords: Dict[int, int] = {}
        for entry in d["coords"]:
            try:
                pos = ctx.basis.position_of_label(entry["commutator"])
            except KeyError:
                raise ValueError(f"{entry['commutator']} is not a basic commutator") from None
            coords[pos] = coords.get(pos, 0) + int(entry["exp"])
        return cls(ctx, coords)


def collect(word: Word, ctx: GroupContext) -> NilpotentElement:
    """Normal form of ``word`` in F_{n,c}."""
    return NilpotentElement.from_series(ctx, ctx.word_series(word))


def mul(a: NilpotentElement, b: NilpotentElement) -> NilpotentElement:
    """The product a b in normal form."""
    return a * b


def inv(a: NilpotentElement) -> NilpotentElement:
    """The inverse of ``a``."""
    return a.inverse()


def power(a: NilpotentElement, k: int) -> NilpotentElement:
    """The k-th power of ``a``, negative k through the inverse."""
    return a**k


def commutator(*args: Union[NilpotentElement, Iterable[NilpotentElement]]) -> NilpotentElement:
    """Left-normed commutator [a1, ..., as] with [u,v] = u v u^-1 v^-1.

    Accepts the entries either as arguments or as a single iterable.
    """
    entries: Iterable[Any]
    if len(args) == 1 and not isinstance(args[0], NilpotentElement):
        entries = args[0]
    else:
        entries = args
    elements: List[NilpotentElement] = list(entries)
    for element in elements:
        if not isinstance(element, NilpotentElement):
            raise TypeError(f"commutator entries must be group elements, got {element!r}")
    if len(elements) < 2:
        raise ValueError("a commutator needs at least two entries")
    ctx = elements[0].ctx
    series = elements[0].series
    for element in elements[1:]:
        elements[0]._same_context(element)
        series = ctx.checked(series.commutator(element.series))
    return NilpotentElement.from_series(ctx, series)


def weight_filtration(a: NilpotentElement) -> int:
    """Largest k with ``a`` in N_k; c+1 for the identity."""
    return a.weight_filtration()


def is_central(a: NilpotentElement) -> bool:
    """True iff ``a`` commutes with every generator."""
    return a.is_central()
