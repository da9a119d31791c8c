"""Truncated non-commutative power series with integer coefficients.

A series over the letters X_1..X_n is stored level by level: ``levels[d]``
maps each degree-d monomial (a tuple of letter indices) to its coefficient.
Everything above ``depth`` is discarded. Sending x_i to 1 + X_i embeds the free
nilpotent group of class ``depth`` faithfully into the units of this ring.
"""

from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

Monomial = Tuple[int, ...]
Level = Dict[Monomial, int]


def generalized_binomial(e: int, k: int) -> int:
    """binom(e, k) for any integer e, including negative e."""
    if k < 0:
        return 0
    if e >= 0:
        return comb(e, k)
    sign = -1 if k % 2 else 1
    return sign * comb(k - e - 1, k)


class TruncatedSeries:
    __slots__ = ("depth", "levels")

    depth: int
    levels: Tuple[Level, ...]

    def __init__(self, depth: int, levels: Optional[List[Level]] = None) -> None:
        self.depth = depth
        if levels is None:
            levels = [{(): 1}] + [{} for _ in range(depth)]
        self.levels = tuple(
            {w: a for w, a in level.items() if a} for level in levels[: depth + 1]
        )

    @classmethod
    def one(cls, depth: int) -> "TruncatedSeries":
        return cls(depth)

    @classmethod
    def letter_power(cls, depth: int, letter: int, exp: int) -> "TruncatedSeries":
        """(1 + X_letter)^exp."""
        levels: List[Level] = [
            {(letter,) * k: generalized_binomial(exp, k)} for k in range(depth + 1)
        ]
        return cls(depth, levels)

    @classmethod
    def from_polynomial(cls, depth: int, poly: Level) -> "TruncatedSeries":
        """1 + poly for a polynomial without constant term."""
        levels: List[Level] = [{(): 1}] + [{} for _ in range(depth)]
        for w, a in poly.items():
            if 0 < len(w) <= depth:
                levels[len(w)][w] = levels[len(w)].get(w, 0) + a
        return cls(depth, levels)

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        for level in self.levels:
            yield from level.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.depth == other.depth and self.levels == other.levels

    def __repr__(self) -> str:
        return f"TruncatedSeries(depth={self.depth}, terms={len(self)})"

    def is_one(self) -> bool:
        return self.levels[0] == {(): 1} and not any(self.levels[1:])

    def lowest_degree(self) -> Optional[int]:
        """Smallest positive degree with a nonzero coefficient, None for 1 + 0."""
        for d in range(1, self.depth + 1):
            if self.levels[d]:
                return d
        return None

    def homogeneous(self, degree: int) -> Level:
        return dict(self.levels[degree])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        depth = self.depth
        out: List[Level] = [{} for _ in range(depth + 1)]
        for da, la in enumerate(self.levels):
            if not la:
                continue
            for db in range(depth - da + 1):
                lb = other.levels[db]
                if not lb:
                    continue
                target = out[da + db]
                for u, a in la.items():
                    for v, b in lb.items():
                        w = u + v
                        target[w] = target.get(w, 0) + a * b
        return TruncatedSeries(depth, out)

    def _augmentation(self) -> "TruncatedSeries":
        """The series minus its constant term."""
        return TruncatedSeries(self.depth, [{}] + [dict(level) for level in self.levels[1:]])

    def power(self, e: int) -> "TruncatedSeries":
        """(1 + X)^e = sum_k binom(e, k) X^k for a series 1 + X."""
        if self.levels[0] != {(): 1}:
            raise ValueError("only series with constant term 1 have integer powers")
        if e == 0:
            return TruncatedSeries.one(self.depth)
        if e == 1:
            return self
        x = self._augmentation()
        out: List[Level] = [{(): 1}] + [{} for _ in range(self.depth)]
        term = x
        for k in range(1, self.depth + 1):
            if term.lowest_degree() is None:
                break
            coefficient = generalized_binomial(e, k)
            if coefficient:
                for d in range(1, self.depth + 1):
                    target = out[d]
                    for w, a in term.levels[d].items():
                        target[w] = target.get(w, 0) + coefficient * a
            term = term * x
        return TruncatedSeries(self.depth, out)

    def inverse(self) -> "TruncatedSeries":
        return self.power(-1)

    def commutator(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Group commutator a b a^-1 b^-1."""
        return self * other * self.inverse() * other.inverse()
