"""Hall bases of basic commutators and the Witt numbers counting them."""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy import divisors, mobius

from nilpotra.errors import ResourceLimitError
from nilpotra.hall.commutator import CommutatorTree, HallOrder, is_basic
from nilpotra.parameters import DEFAULT_MAX_WITT

log = logging.getLogger(__name__)


def witt_count(n: int, m: int) -> int:
    """Number of basic commutators of weight ``m`` on ``n`` generators."""
    if n < 1 or m < 1:
        raise ValueError(f"rank and weight must be positive, got n={n}, m={m}")
    total = sum(int(mobius(d)) * n ** (m // d) for d in divisors(m))
    return total // m


class HallBasis:
    """The basic commutators of weights 1..c over n generators, in basis order.

    Positions are 0-based indices into ``trees``; stratum ``m`` holds the
    weight-m commutators sorted by ``HallOrder``.
    """

    def __init__(self, n: int, c: int, strata: Sequence[Sequence[CommutatorTree]]) -> None:
        self.rank = n
        self.nclass = c
        self.order = HallOrder(n)
        self.strata: Tuple[Tuple[CommutatorTree, ...], ...] = tuple(
            tuple(stratum) for stratum in strata
        )
        self.trees: Tuple[CommutatorTree, ...] = tuple(
            tree for stratum in self.strata for tree in stratum
        )
        self._positions: Dict[CommutatorTree, int] = {
            tree: pos for pos, tree in enumerate(self.trees)
        }
        self._labels: Dict[str, int] = {
            str(tree): pos for pos, tree in enumerate(self.trees)
        }
        self._weights: Tuple[int, ...] = tuple(tree.weight for tree in self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __getitem__(self, pos: int) -> CommutatorTree:
        return self.trees[pos]

    def __contains__(self, tree: object) -> bool:
        return tree in self._positions

    def position(self, tree: CommutatorTree) -> int:
        """Basis position of ``tree``; KeyError if it is not basic here."""
        return self._positions[tree]

    def position_of_label(self, label: str) -> int:
        """Basis position of the commutator printed as ``label``."""
        return self._labels[label.replace(" ", "")]

    def weight_of(self, pos: int) -> int:
        return self._weights[pos]

    def positions_of_weight(self, m: int) -> range:
        start = sum(len(stratum) for stratum in self.strata[: m - 1])
        return range(start, start + len(self.strata[m - 1]))

    def counts(self) -> List[int]:
        return [len(stratum) for stratum in self.strata]

    def dump(self) -> List[str]:
        """One line per commutator in basis order, with its weight."""
        width = max((len(str(tree)) for tree in self.trees), default=0)
        return [f"{str(tree):<{width}}  (weight {tree.weight})" for tree in self.trees]


@lru_cache(maxsize=None)
def _build(n: int, c: int) -> HallBasis:
    order = HallOrder(n)
    strata: List[List[CommutatorTree]] = [[CommutatorTree.leaf(g) for g in range(1, n + 1)]]
    for m in range(2, c + 1):
        stratum = []
        for left_weight in range(1, m):
            for u in strata[left_weight - 1]:
                for v in strata[m - left_weight - 1]:
                    if not order.greater(u, v):
                        continue
                    if u.is_leaf or (u.right is not None and order.less_equal(u.right, v)):
                        stratum.append(CommutatorTree.node(u, v))
        stratum.sort(key=HallOrder.key)
        strata.append(stratum)
    basis = HallBasis(n, c, strata)
    assert all(is_basic(tree, order) for tree in basis.trees)
    log.debug(f"built Hall basis n={n} c={c} counts={basis.counts()}")
    return basis


def build_hall_basis(n: int, c: int, max_witt: int = DEFAULT_MAX_WITT) -> HallBasis:
    """Build (or fetch the cached) Hall basis of F_{n,c}.

    Raises:
        ValueError: n or c is not positive
        ResourceLimitError: the basis would hold more than ``max_witt`` commutators
    """
    if n < 1 or c < 1:
        raise ValueError(f"rank and class must be positive, got n={n}, c={c}")
    size = sum(witt_count(n, m) for m in range(1, c + 1))
    if size > max_witt:
        raise ResourceLimitError("max_witt", max_witt, size)
    return _build(n, c)
