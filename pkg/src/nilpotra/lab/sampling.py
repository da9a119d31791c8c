"""Seeded random words, elements and automorphisms for the lab checks."""

import random
from typing import Optional

from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, collect
from nilpotra.morphism.endomorphism import Endomorphism, ia_automorphism
from nilpotra.morphism.integer_matrix import random_unimodular
from nilpotra.parameters import DEFAULT_RANDOM_WORD_LENGTH
from nilpotra.word.word import Word

EXPONENTS = (-2, -1, 1, 2)


class RandomSampler:
    """All randomness of a check flows through one seeded generator."""

    def __init__(self, seed: int, word_length: int = DEFAULT_RANDOM_WORD_LENGTH) -> None:
        self.seed = seed
        self.word_length = word_length
        self.rng = random.Random(seed)

    def word(self, rank: int, length: Optional[int] = None) -> Word:
        """Uniform letters x_i^e with e in {-2,-1,1,2}, freely reduced."""
        length = self.word_length if length is None else length
        return Word(
            (self.rng.randint(1, rank), self.rng.choice(EXPONENTS)) for _ in range(length)
        )

    def element(self, ctx: GroupContext) -> NilpotentElement:
        return collect(self.word(ctx.rank), ctx)

    def deep_element(self, ctx: GroupContext, k: int, factors: int = 3) -> NilpotentElement:
        """A random element of N_k, product of basis commutators of weight >= k."""
        positions = [p for p in range(len(ctx.basis)) if ctx.basis.weight_of(p) >= k]
        element = NilpotentElement.identity(ctx)
        if not positions:
            return element
        for _ in range(factors):
            pos = self.rng.choice(positions)
            exp = self.rng.choice((-3, -2, -1, 1, 2, 3))
            element = element * NilpotentElement.basis_element(ctx, pos, exp)
        return element

    def ia_automorphism(self, ctx: GroupContext, k: int = 1) -> Endomorphism:
        """A random automorphism of IA level at least ``k``."""
        return ia_automorphism(
            ctx, {i: self.deep_element(ctx, k + 1) for i in range(1, ctx.rank + 1)}
        )

    def automorphism(self, ctx: GroupContext) -> Endomorphism:
        linear = Endomorphism.from_matrix(ctx, random_unimodular(ctx.rank, self.rng))
        return linear.compose(self.ia_automorphism(ctx, 1))
