"""Endomorphisms and automorphisms of F_{n,c} given by generator images."""

import logging
from math import gcd
from typing import Any, ClassVar, Dict, List, Mapping, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix

from nilpotra.errors import (
    CollectionError,
    ContextMismatchError,
    NotAnAutomorphismError,
    PreconditionError,
)
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, collect
from nilpotra.group.series import TruncatedSeries
from nilpotra.morphism.integer_matrix import (
    IntegerMatrix,
    complete_unimodular,
    integer_inverse,
    is_unimodular,
)
from nilpotra.word.parser import parse_substitution
from nilpotra.word.word import Word


class Endomorphism:
    """The endomorphism x_i -> images[i-1] of F_{n,c}.

    Instances are immutable. The series images of basis commutators are
    cached on first application.
    """

    log: ClassVar[logging.Logger] = logging.getLogger(__name__)

    ctx: GroupContext
    images: Tuple[NilpotentElement, ...]

    def __init__(self, ctx: GroupContext, images: Sequence[NilpotentElement]) -> None:
        if len(images) != ctx.rank:
            raise ValueError(f"{ctx} needs {ctx.rank} images, got {len(images)}")
        for image in images:
            if image.ctx != ctx:
                raise ContextMismatchError(f"image in {image.ctx}, expected {ctx}")
        self.ctx = ctx
        self.images = tuple(images)
        self._tree_series: Dict[int, TruncatedSeries] = {}

    # constructors

    @classmethod
    def identity(cls, ctx: GroupContext) -> "Endomorphism":
        return cls(ctx, [NilpotentElement.generator(ctx, i) for i in range(1, ctx.rank + 1)])

    @classmethod
    def from_images(
        cls, ctx: GroupContext, mapping: Mapping[int, NilpotentElement]
    ) -> "Endomorphism":
        """Generators missing from ``mapping`` are fixed."""
        return cls(
            ctx,
            [
                mapping[i] if i in mapping else NilpotentElement.generator(ctx, i)
                for i in range(1, ctx.rank + 1)
            ],
        )

    @classmethod
    def from_words(cls, ctx: GroupContext, mapping: Mapping[int, Word]) -> "Endomorphism":
        return cls.from_images(ctx, {i: collect(w, ctx) for i, w in mapping.items()})

    @classmethod
    def from_text(cls, ctx: GroupContext, text: str) -> "Endomorphism":
        """Parse ``x1 -> word; x2 -> word``; unmentioned generators are fixed."""
        return cls.from_words(
            ctx, parse_substitution(text, ctx.rank, ctx.limits.max_word_len)
        )

    @classmethod
    def from_matrix(cls, ctx: GroupContext, m: Matrix) -> "Endomorphism":
        """x_j -> x_1^m[0,j-1] ... x_n^m[n-1,j-1]."""
        if m.shape != (ctx.rank, ctx.rank):
            raise ValueError(f"expected a {ctx.rank}x{ctx.rank} matrix, got {m.shape}")
        return cls(
            ctx,
            [
                NilpotentElement(ctx, {i: int(m[i, j]) for i in range(ctx.rank)})
                for j in range(ctx.rank)
            ],
        )

    # application

    def _series_of(self, pos: int) -> TruncatedSeries:
        if pos not in self._tree_series:
            tree = self.ctx.basis[pos]
            if tree.generator is not None:
                series = self.images[tree.generator - 1].series
            else:
                assert tree.left is not None and tree.right is not None
                series = self.ctx.checked(
                    self._series_of(self.ctx.basis.position(tree.left)).commutator(
                        self._series_of(self.ctx.basis.position(tree.right))
                    )
                )
            self._tree_series[pos] = series
        return self._tree_series[pos]

    def apply(self, a: NilpotentElement) -> NilpotentElement:
        if a.ctx != self.ctx:
            raise ContextMismatchError(f"{a.ctx} element given to endomorphism of {self.ctx}")
        if a.is_identity():
            return a
        series = self.ctx.product_series(
            (self._series_of(pos), exp) for pos, exp in a.coords.items()
        )
        return NilpotentElement.from_series(self.ctx, series)

    def __call__(self, a: NilpotentElement) -> NilpotentElement:
        return self.apply(a)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self o other: x_i -> self(other(x_i))."""
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"cannot compose {self.ctx} with {other.ctx}")
        return Endomorphism(self.ctx, [self.apply(image) for image in other.images])

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.compose(other)

    # abelianization and filtration

    def abelianization_matrix(self) -> IntegerMatrix:
        """Column i holds the weight-1 coordinates of the image of x_(i+1)."""
        n = self.ctx.rank
        return ImmutableMatrix(n, n, lambda i, j: self.images[j].coordinate(i))

    def is_automorphism(self) -> bool:
        return is_unimodular(self.abelianization_matrix())

    def is_identity(self) -> bool:
        return all(
            image == NilpotentElement.generator(self.ctx, i)
            for i, image in enumerate(self.images, start=1)
        )

    def _require_automorphism(self) -> None:
        if not self.is_automorphism():
            raise NotAnAutomorphismError(
                f"abelianization determinant is {self.abelianization_matrix().det()}"
            )

    def _tails(self) -> List[NilpotentElement]:
        """t_i with images[i] = x_i t_i."""
        return [
            NilpotentElement.generator(self.ctx, i, -1) * image
            for i, image in enumerate(self.images, start=1)
        ]

    def ia_level(self) -> int:
        """Largest k <= c with f(x_i) x_i^-1 in N_(k+1) for every i."""
        self._require_automorphism()
        level = min(
            (image * NilpotentElement.generator(self.ctx, i, -1)).weight_filtration() - 1
            for i, image in enumerate(self.images, start=1)
        )
        return min(level, self.ctx.nclass)

    def invert(self) -> "Endomorphism":
        """Inverse automorphism.

        The abelianization is inverted over the integers and lifted; what
        remains is an IA automorphism whose layers are peeled by the
        corrections x_i -> x_i t_i^-1, each raising the IA level.
        """
        self._require_automorphism()
        linear = Endomorphism.from_matrix(
            self.ctx, integer_inverse(self.abelianization_matrix())
        )
        remainder = self.compose(linear)
        inverse = Endomorphism.identity(self.ctx)
        for _ in range(self.ctx.nclass):
            if remainder.is_identity():
                break
            level = remainder.ia_level()
            correction = Endomorphism(
                self.ctx,
                [
                    NilpotentElement.generator(self.ctx, i) * tail.inverse()
                    for i, tail in enumerate(remainder._tails(), start=1)
                ],
            )
            remainder = remainder.compose(correction)
            inverse = inverse.compose(correction)
            self.log.debug(f"peeled IA layer {level} of {self.ctx}")
        if not remainder.is_identity():
            raise CollectionError("IA peeling did not terminate")
        return linear.compose(inverse)

    # change of class

    def project(self, k: int) -> "Endomorphism":
        """Induced endomorphism of F_{n,k}."""
        if not 1 <= k <= self.ctx.nclass:
            raise PreconditionError(f"class {k} is not in 1..{self.ctx.nclass}")
        target = GroupContext.get(self.ctx.rank, k, self.ctx.limits)
        return Endomorphism(
            target,
            [
                NilpotentElement(
                    target,
                    {p: e for p, e in image.coords.items() if self.ctx.basis.weight_of(p) <= k},
                )
                for image in self.images
            ],
        )

    def lift(self, c: int) -> "Endomorphism":
        """Automorphism of F_{n,c} with the same coordinates."""
        self._require_automorphism()
        if c < self.ctx.nclass:
            raise PreconditionError(f"cannot lift class {self.ctx.nclass} to {c}")
        target = GroupContext.get(self.ctx.rank, c, self.ctx.limits)
        return Endomorphism(
            target, [NilpotentElement(target, dict(image.coords)) for image in self.images]
        )

    # python protocol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.ctx == other.ctx and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.ctx, self.images))

    def __str__(self) -> str:
        return "; ".join(
            f"x{i} -> {'' if image.is_identity() else image}"
            for i, image in enumerate(self.images, start=1)
        )

    def __repr__(self) -> str:
        return f"Endomorphism({self}, n={self.ctx.rank}, c={self.ctx.nclass})"

    def toDict(self) -> Dict[str, Any]:
        return {
            "rank": self.ctx.rank,
            "class": self.ctx.nclass,
            "images": [image.toDict() for image in self.images],
        }

    @classmethod
    def fromDict(cls, d: Mapping[str, Any]) -> "Endomorphism":
        ctx = GroupContext.get(int(d["rank"]), int(d["class"]))
        return cls(ctx, [NilpotentElement.fromDict(image, ctx) for image in d["images"]])


def apply(f: Endomorphism, a: NilpotentElement) -> NilpotentElement:
    """Image of ``a`` under ``f``."""
    return f.apply(a)


def compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """f o g."""
    return f.compose(g)


def abelianization_matrix(f: Endomorphism) -> IntegerMatrix:
    """Integer matrix of ``f`` on Z^n, column j the image of x_j."""
    return f.abelianization_matrix()


def is_automorphism(f: Endomorphism) -> bool:
    """True iff the abelianization of ``f`` is unimodular."""
    return f.is_automorphism()


def invert(f: Endomorphism) -> Endomorphism:
    """Inverse of the automorphism ``f``."""
    return f.invert()


def ia_level(f: Endomorphism) -> int:
    """Largest k <= c with f in IA_k."""
    return f.ia_level()


def project(f: Endomorphism, k: int) -> Endomorphism:
    """The map induced on the quotient F_{n,k}."""
    return f.project(k)


def lift(g: Endomorphism, c: int) -> Endomorphism:
    """Lift ``g`` to F_{n,c} through its generator images."""
    return g.lift(c)


def inner(a: NilpotentElement) -> Endomorphism:
    """tau_a: z -> a z a^-1."""
    ctx = a.ctx
    if a.is_identity():
        return Endomorphism.identity(ctx)
    a_inverse = a.series.inverse()
    return Endomorphism(
        ctx,
        [
            NilpotentElement.from_series(
                ctx, a.series * NilpotentElement.generator(ctx, i).series * a_inverse
            )
            for i in range(1, ctx.rank + 1)
        ],
    )


def power(f: Endomorphism, k: int) -> Endomorphism:
    """k-fold composite of f; negative k uses the inverse."""
    base = f if k >= 0 else f.invert()
    k = abs(k)
    result = Endomorphism.identity(f.ctx)
    while k:
        if k & 1:
            result = result.compose(base)
        k >>= 1
        if k:
            base = base.compose(base)
    return result


def conjugate(f: Endomorphism, p: Endomorphism) -> Endomorphism:
    """f^p = p o f o p^-1."""
    return p.compose(f).compose(p.invert())


def automorphism_commutator(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """[f,g] = f g f^-1 g^-1."""
    return f.compose(g).compose(f.invert()).compose(g.invert())


def permutation(ctx: GroupContext, perm: Mapping[int, int]) -> Endomorphism:
    """x_i -> x_perm[i]; generators missing from ``perm`` are fixed."""
    return Endomorphism.from_images(
        ctx, {i: NilpotentElement.generator(ctx, j) for i, j in perm.items()}
    )


def ia_automorphism(ctx: GroupContext, tails: Mapping[int, NilpotentElement]) -> Endomorphism:
    """x_i -> x_i t_i. With every t_i in N_k the result lies in IA_(k-1)."""
    return Endomorphism.from_images(
        ctx, {i: NilpotentElement.generator(ctx, i) * t for i, t in tails.items()}
    )


def is_primitive(a: NilpotentElement) -> bool:
    """True iff the weight-1 coordinates of ``a`` are coprime."""
    return gcd(*(a.coordinate(i) for i in range(a.ctx.rank))) == 1


def primitive_witness(a: NilpotentElement) -> Endomorphism:
    """An automorphism sending x1 to ``a``.

    The abelianized row is completed to a unimodular matrix and lifted; the
    remaining discrepancy in N_2 is absorbed by an IA correction on x1.
    """
    if not is_primitive(a):
        raise PreconditionError(f"{a} is not primitive")
    ctx = a.ctx
    linear = Endomorphism.from_matrix(
        ctx, complete_unimodular([a.coordinate(i) for i in range(ctx.rank)])
    )
    discrepancy = linear.apply(NilpotentElement.generator(ctx, 1)).inverse() * a
    correction = ia_automorphism(ctx, {1: linear.invert().apply(discrepancy)})
    witness = linear.compose(correction)
    assert witness.apply(NilpotentElement.generator(ctx, 1)) == a
    return witness

