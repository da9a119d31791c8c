"""Binary commutator trees over indexed generators and their total order."""

from functools import total_ordering
from typing import Any, Mapping, Optional, Tuple

from nilpotra.word.word import Word, commutator_word


@total_ordering
class CommutatorTree:
    """A leaf ``x_g`` or a bracket ``[left, right]`` of two trees.

    Trees are immutable and hashable. Comparison follows ``HallOrder``.
    """

    __slots__ = ("generator", "left", "right", "weight", "leaves", "_key")

    generator: Optional[int]
    left: Optional["CommutatorTree"]
    right: Optional["CommutatorTree"]
    weight: int
    leaves: Tuple[int, ...]
    _key: Tuple[Any, ...]

    def __init__(
        self,
        generator: Optional[int] = None,
        left: Optional["CommutatorTree"] = None,
        right: Optional["CommutatorTree"] = None,
    ) -> None:
        if generator is not None:
            if left is not None or right is not None:
                raise ValueError("a leaf has no children")
            if generator < 1:
                raise ValueError(f"generator index must be positive, got {generator}")
            self.weight = 1
            self.leaves = (generator,)
            self._key = (1, self.leaves)
        else:
            if left is None or right is None:
                raise ValueError("a bracket needs two children")
            self.weight = left.weight + right.weight
            self.leaves = left.leaves + right.leaves
            self._key = (self.weight, self.leaves, left._key, right._key)
        self.generator = generator
        self.left = left
        self.right = right

    @classmethod
    def leaf(cls, generator: int) -> "CommutatorTree":
        return cls(generator=generator)

    @classmethod
    def node(cls, left: "CommutatorTree", right: "CommutatorTree") -> "CommutatorTree":
        return cls(left=left, right=right)

    @classmethod
    def left_normed(cls, *generators: int) -> "CommutatorTree":
        """[x_g1, x_g2, ..., x_gs] bracketed from the left."""
        tree = cls.leaf(generators[0])
        for g in generators[1:]:
            tree = cls.node(tree, cls.leaf(g))
        return tree

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None

    @property
    def key(self) -> Tuple[Any, ...]:
        return self._key

    def relabel(self, mapping: Mapping[int, int]) -> "CommutatorTree":
        """Rename every leaf through ``mapping``."""
        if self.generator is not None:
            return CommutatorTree.leaf(mapping[self.generator])
        assert self.left is not None and self.right is not None
        return CommutatorTree.node(self.left.relabel(mapping), self.right.relabel(mapping))

    def to_word(self) -> Word:
        """Expand the tree with [u,v] = u v u^-1 v^-1."""
        if self.generator is not None:
            return Word.generator(self.generator)
        assert self.left is not None and self.right is not None
        return commutator_word(self.left.to_word(), self.right.to_word())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommutatorTree):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other: "CommutatorTree") -> bool:
        if not isinstance(other, CommutatorTree):
            return NotImplemented
        return self._key < other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        if self.generator is not None:
            return f"x{self.generator}"
        return f"[{self.left},{self.right}]"

    def __repr__(self) -> str:
        return f"CommutatorTree({self})"


class HallOrder:
    """Total order on commutator trees used by the collecting conditions.

    Weight is compared first, then the leaf sequences lexicographically, then
    the left subtrees and finally the right subtrees.
    """

    def __init__(self, rank: int) -> None:
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank

    @staticmethod
    def key(tree: CommutatorTree) -> Tuple[Any, ...]:
        return tree.key

    def compare(self, a: CommutatorTree, b: CommutatorTree) -> int:
        """Return -1, 0 or 1 as ``a`` is smaller, equal or greater than ``b``."""
        if a.key == b.key:
            return 0
        return -1 if a.key < b.key else 1

    def greater(self, a: CommutatorTree, b: CommutatorTree) -> bool:
        return self.compare(a, b) > 0

    def less_equal(self, a: CommutatorTree, b: CommutatorTree) -> bool:
        return self.compare(a, b) <= 0


def is_basic(tree: CommutatorTree, order: HallOrder) -> bool:
    """True iff ``tree`` is a leaf or ``[u,v]`` with u, v basic, u > v and
    u a leaf or ``u = [u1,u2]`` with u2 <= v."""
    if tree.is_leaf:
        return True
    u, v = tree.left, tree.right
    assert u is not None and v is not None
    if not (is_basic(u, order) and is_basic(v, order) and order.greater(u, v)):
        return False
    if u.is_leaf:
        return True
    assert u.right is not None
    return order.less_equal(u.right, v)


def nu(tree: CommutatorTree, generator: int) -> int:
    """Number of leaves of ``tree`` equal to ``generator``."""
    return tree.leaves.count(generator)
