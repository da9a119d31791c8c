"""Random homomorphisms of F_{n,c} into upper unitriangular integer matrices.

The group of (c+1)x(c+1) upper unitriangular integer matrices is nilpotent of
class c, so any assignment of generators extends to F_{n,c}. Two words with the
same normal form must therefore always evaluate to the same matrix.
"""

import random
from typing import Dict, Optional

from sympy import ImmutableMatrix, Matrix, eye

from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement
from nilpotra.word.word import Word


class UnitriangularRepresentation:
    """One random assignment x_i -> U_i of unitriangular matrices."""

    def __init__(
        self, ctx: GroupContext, rng: Optional[random.Random] = None, bound: int = 3
    ) -> None:
        self.ctx = ctx
        self.size = ctx.nclass + 1
        rng = rng if rng is not None else random.Random()
        self.images: Dict[int, ImmutableMatrix] = {}
        for gen in range(1, ctx.rank + 1):
            m = eye(self.size)
            for i in range(self.size):
                for j in range(i + 1, self.size):
                    m[i, j] = rng.randint(-bound, bound)
            self.images[gen] = ImmutableMatrix(m)
        self._tree_images: Dict[int, ImmutableMatrix] = {}

    def identity(self) -> Matrix:
        return eye(self.size)

    def evaluate_word(self, word: Word) -> Matrix:
        result = self.identity()
        for gen, exp in word:
            result = result * self.images[gen] ** exp
        return result

    def _tree_image(self, pos: int) -> ImmutableMatrix:
        if pos not in self._tree_images:
            tree = self.ctx.basis[pos]
            if tree.generator is not None:
                image = self.images[tree.generator]
            else:
                assert tree.left is not None and tree.right is not None
                u = self._tree_image(self.ctx.basis.position(tree.left))
                v = self._tree_image(self.ctx.basis.position(tree.right))
                image = ImmutableMatrix(u * v * u.inv() * v.inv())
            self._tree_images[pos] = image
        return self._tree_images[pos]

    def evaluate(self, element: NilpotentElement) -> Matrix:
        """Image of a normal form, product of basis images in basis order."""
        result = self.identity()
        for pos, exp in element.coords.items():
            result = result * self._tree_image(pos) ** exp
        return result
