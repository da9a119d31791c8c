"""The free nilpotent group F_{n,c} and its normal form solver.

Elements are carried into truncated power series (x_i -> 1 + X_i) where the
group law is plain multiplication. Hall coordinates are read back weight by
weight: the lowest nonzero homogeneous part of a series is a combination of
the Lie polynomials of the basic commutators of that weight, whose exponents
are found by exact linear algebra and peeled off before the next weight.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Dict, Iterable, Optional, Tuple

from sympy import Matrix

from nilpotra.errors import CollectionError, GeneratorRangeError, ResourceLimitError
from nilpotra.group.series import Level, Monomial, TruncatedSeries
from nilpotra.hall.basis import HallBasis, build_hall_basis
from nilpotra.parameters import Limits
from nilpotra.word.word import Word

Content = Tuple[int, ...]


def _poly_product(a: Level, b: Level) -> Level:
    out: Level = {}
    for u, x in a.items():
        for v, y in b.items():
            out[u + v] = out.get(u + v, 0) + x * y
    return out


def _poly_bracket(a: Level, b: Level) -> Level:
    out = _poly_product(a, b)
    for w, x in _poly_product(b, a).items():
        out[w] = out.get(w, 0) - x
    return {w: x for w, x in out.items() if x}


@dataclass(frozen=True)
class _Block:
    """Basic commutators sharing one letter content and the pivot monomials
    that determine their exponents."""

    positions: Tuple[int, ...]
    pivots: Tuple[Monomial, ...]
    inverse: Tuple[Tuple[Fraction, ...], ...]


class GroupContext:
    """F_{n,c} together with its Hall basis and cached series data.

    Two contexts are equal when they share rank and class; use ``get`` to
    obtain a shared instance so that caches are reused.
    """

    log: ClassVar[logging.Logger] = logging.getLogger(__name__)
    _registry: ClassVar[Dict[Tuple[int, int, Limits], "GroupContext"]] = {}

    rank: int
    nclass: int
    limits: Limits
    basis: HallBasis

    def __init__(self, n: int, c: int, limits: Optional[Limits] = None) -> None:
        self.limits = limits if limits is not None else Limits.from_env()
        self.basis = build_hall_basis(n, c, self.limits.max_witt)
        self.rank = n
        self.nclass = c
        self._lie: Dict[int, Level] = {}
        self._basis_series: Dict[int, TruncatedSeries] = {}
        self._blocks: Dict[Content, Optional[_Block]] = {}
        self._content_positions: Dict[Content, Tuple[int, ...]] = {}
        for pos, tree in enumerate(self.basis.trees):
            content = tuple(sorted(tree.leaves))
            self._content_positions[content] = self._content_positions.get(content, ()) + (
                pos,
            )

    @classmethod
    def get(cls, n: int, c: int, limits: Optional[Limits] = None) -> "GroupContext":
        """Shared context for (n, c, limits)."""
        limits = limits if limits is not None else Limits.from_env()
        key = (n, c, limits)
        if key not in cls._registry:
            cls._registry[key] = cls(n, c, limits)
        return cls._registry[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupContext):
            return NotImplemented
        return (self.rank, self.nclass) == (other.rank, other.nclass)

    def __hash__(self) -> int:
        return hash((self.rank, self.nclass))

    def __repr__(self) -> str:
        return f"GroupContext(n={self.rank}, c={self.nclass})"

    # resource guard

    def checked(self, series: TruncatedSeries) -> TruncatedSeries:
        if len(series) > self.limits.max_word_len:
            raise ResourceLimitError("max_word_len", self.limits.max_word_len, len(series))
        return series

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.nclass)

    # series of words and basis elements

    def word_series(self, word: Word) -> TruncatedSeries:
        if len(word) > self.limits.max_word_len:
            raise ResourceLimitError("max_word_len", self.limits.max_word_len, len(word))
        series = self.one()
        for gen, exp in word:
            if gen > self.rank:
                raise GeneratorRangeError(gen, self.rank)
            factor = TruncatedSeries.letter_power(self.nclass, gen, exp)
            series = self.checked(series * factor)
        return series

    def lie_polynomial(self, pos: int) -> Level:
        """Leading homogeneous part of the basis commutator at ``pos``."""
        if pos not in self._lie:
            tree = self.basis[pos]
            if tree.generator is not None:
                poly: Level = {(tree.generator,): 1}
            else:
                assert tree.left is not None and tree.right is not None
                poly = _poly_bracket(
                    self.lie_polynomial(self.basis.position(tree.left)),
                    self.lie_polynomial(self.basis.position(tree.right)),
                )
            self._lie[pos] = poly
        return self._lie[pos]

    def basis_series(self, pos: int) -> TruncatedSeries:
        if pos not in self._basis_series:
            tree = self.basis[pos]
            if tree.generator is not None:
                series = TruncatedSeries.letter_power(self.nclass, tree.generator, 1)
            else:
                assert tree.left is not None and tree.right is not None
                series = self.basis_series(self.basis.position(tree.left)).commutator(
                    self.basis_series(self.basis.position(tree.right))
                )
            self._basis_series[pos] = series
        return self._basis_series[pos]

    def product_series(self, factors: Iterable[Tuple[TruncatedSeries, int]]) -> TruncatedSeries:
        """Ordered product of ``series ** exp`` factors."""
        result = self.one()
        for series, exp in factors:
            if exp:
                result = self.checked(result * self.checked(series.power(exp)))
        return result

    def coords_series(self, coords: Dict[int, int]) -> TruncatedSeries:
        return self.product_series((self.basis_series(pos), coords[pos]) for pos in sorted(coords))

    # coordinate extraction

    def _block(self, content: Content) -> Optional[_Block]:
        if content in self._blocks:
            return self._blocks[content]
        positions = self._content_positions.get(content)
        if not positions:
            self._blocks[content] = None
            return None
        polys = [self.lie_polynomial(pos) for pos in positions]
        monomials = sorted({w for poly in polys for w in poly})
        matrix = Matrix(len(positions), len(monomials), lambda i, j: polys[i].get(monomials[j], 0))
        _, pivot_columns = matrix.rref()
        if len(pivot_columns) != len(positions):
            raise CollectionError(f"Lie polynomials of content {content} are dependent")
        square = matrix.extract(list(range(len(positions))), list(pivot_columns))
        inverse = square.inv()
        size = range(len(positions))
        block = _Block(
            positions=positions,
            pivots=tuple(monomials[j] for j in pivot_columns),
            inverse=tuple(
                tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in size)
                for i in size
            ),
        )
        self.log.debug(f"solver block {content}: {len(positions)} commutator(s)")
        self._blocks[content] = block
        return block

    def _solve_layer(self, layer: Level) -> Dict[int, int]:
        by_content: Dict[Content, Level] = {}
        for w, a in layer.items():
            by_content.setdefault(tuple(sorted(w)), {})[w] = a
        exponents: Dict[int, int] = {}
        for content, part in by_content.items():
            block = self._block(content)
            if block is None:
                raise CollectionError(f"no basic commutator has letter content {content}")
            values = [part.get(w, 0) for w in block.pivots]
            residual = dict(part)
            for j, pos in enumerate(block.positions):
                exp = sum(
                    (values[i] * block.inverse[i][j] for i in range(len(values))), Fraction(0)
                )
                if exp.denominator != 1:
                    raise CollectionError(f"non-integral exponent {exp} for {self.basis[pos]}")
                if exp:
                    exponents[pos] = int(exp)
                    for w, a in self.lie_polynomial(pos).items():
                        residual[w] = residual.get(w, 0) - int(exp) * a
            if any(residual.values()):
                raise CollectionError(f"layer of content {content} is not a Lie element")
        return exponents

    def coordinates(self, series: TruncatedSeries) -> Dict[int, int]:
        """Hall coordinates of the group element represented by ``series``."""
        coords: Dict[int, int] = {}
        remainder = series
        for m in range(1, self.nclass + 1):
            low = remainder.lowest_degree()
            if low is None:
                break
            if low < m:
                raise CollectionError(f"degree {low} survived peeling weight {low}")
            if low > m:
                continue
            layer = self._solve_layer(remainder.levels[m])
            for pos in sorted(layer):
                coords[pos] = layer[pos]
                peel = self.basis_series(pos).power(-layer[pos])
                remainder = self.checked(peel * remainder)
        if not remainder.is_one():
            raise CollectionError("series is not the image of a group element")
        return coords
