"""Balanced products of IA automorphisms built from generator pairs.

Generators are laid out in m triples x_(3k+1), x_(3k+2), x_(3k+3) followed by a
tuple ybar of c-2 extra generators, x1 playing a distinguished role. For a list
of pairs (p, q):

    alpha: p -> p [q, x1]          xi1: p -> p [p, ybar, x1]
    beta:  q -> q [p, ybar]        xi2: q -> q [q, x1, ybar]

satisfy xi1 alpha beta = xi2 beta alpha, so gamma = xi1 xi2^-1 = [beta, alpha]
is a commutator of automorphisms lying in IA_(c-1).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from nilpotra.errors import PreconditionError
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, commutator
from nilpotra.lab.report import CheckReport
from nilpotra.morphism.endomorphism import (
    Endomorphism,
    automorphism_commutator,
    conjugate,
    permutation,
    power,
)
from nilpotra.parameters import Limits

log = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BlockLayout:
    """m generator triples followed by c-2 generators ybar."""

    nclass: int
    blocks: int

    def __post_init__(self) -> None:
        if self.nclass < 3:
            raise PreconditionError(f"class must be at least 3, got {self.nclass}")
        if self.blocks < 1:
            raise PreconditionError(f"at least one block is needed, got {self.blocks}")

    @property
    def rank(self) -> int:
        return 3 * self.blocks + self.nclass - 2

    @property
    def ybar(self) -> Tuple[int, ...]:
        return tuple(range(3 * self.blocks + 1, self.rank + 1))

    @property
    def boundary(self) -> int:
        """The last minus generator, left unmatched by the finite swap."""
        return 3 * self.blocks

    def forward_pairs(self) -> List[Pair]:
        return [(3 * k + 1, 3 * k + 2) for k in range(self.blocks)]

    def mirror_pairs(self) -> List[Pair]:
        return [(3 * k + 3, 3 * k + 2) for k in range(self.blocks)]

    def swap(self) -> Dict[int, int]:
        """x_(3k+3) <-> x_(3k+4) for consecutive blocks."""
        perm: Dict[int, int] = {}
        for k in range(self.blocks - 1):
            perm[3 * k + 3] = 3 * k + 4
            perm[3 * k + 4] = 3 * k + 3
        return perm


@dataclass(frozen=True)
class PairConstruction:
    alpha: Endomorphism
    beta: Endomorphism
    xi1: Endomorphism
    xi2: Endomorphism

    @property
    def gamma(self) -> Endomorphism:
        return self.xi1.compose(self.xi2.invert())


class BalanceBuilder:
    """Builds the automorphisms of a layout inside F_{rank,c}."""

    def __init__(self, layout: BlockLayout, limits: Optional[Limits] = None) -> None:
        self.layout = layout
        self.ctx = GroupContext.get(layout.rank, layout.nclass, limits)

    def x(self, i: int) -> NilpotentElement:
        return NilpotentElement.generator(self.ctx, i)

    def ybar(self) -> List[NilpotentElement]:
        return [self.x(j) for j in self.layout.ybar]

    def plus_term(self, g: int) -> NilpotentElement:
        """[x_g, ybar, x1]."""
        return commutator(self.x(g), *self.ybar(), self.x(1))

    def construction(self, pairs: Sequence[Pair]) -> PairConstruction:
        x1, ybar = self.x(1), self.ybar()
        alpha: Dict[int, NilpotentElement] = {}
        beta: Dict[int, NilpotentElement] = {}
        xi1: Dict[int, NilpotentElement] = {}
        xi2: Dict[int, NilpotentElement] = {}
        for p, q in pairs:
            xp, xq = self.x(p), self.x(q)
            alpha[p] = xp * commutator(xq, x1)
            beta[q] = xq * commutator(xp, *ybar)
            xi1[p] = xp * commutator(xp, *ybar, x1)
            xi2[q] = xq * commutator(xq, x1, *ybar)
        return PairConstruction(
            alpha=Endomorphism.from_images(self.ctx, alpha),
            beta=Endomorphism.from_images(self.ctx, beta),
            xi1=Endomorphism.from_images(self.ctx, xi1),
            xi2=Endomorphism.from_images(self.ctx, xi2),
        )

    def gamma_closed_form(self, pairs: Sequence[Pair]) -> Endomorphism:
        """p -> p [p, ybar, x1], q -> q [q, x1, ybar]^-1."""
        x1, ybar = self.x(1), self.ybar()
        images: Dict[int, NilpotentElement] = {}
        for p, q in pairs:
            images[p] = self.x(p) * self.plus_term(p)
            images[q] = self.x(q) * commutator(self.x(q), x1, *ybar).inverse()
        return Endomorphism.from_images(self.ctx, images)

    def epsilon_closed_form(self) -> Endomorphism:
        """x_(3k+1) -> x_(3k+1) [x_(3k+1), ybar, x1], x_(3k+3) -> inverse tail."""
        images: Dict[int, NilpotentElement] = {}
        for k in range(self.layout.blocks):
            images[3 * k + 1] = self.x(3 * k + 1) * self.plus_term(3 * k + 1)
            images[3 * k + 3] = self.x(3 * k + 3) * self.plus_term(3 * k + 3).inverse()
        return Endomorphism.from_images(self.ctx, images)

    def delta(self) -> Endomorphism:
        """x1 -> x1 [x1, ybar, x1]."""
        return Endomorphism.from_images(self.ctx, {1: self.x(1) * self.plus_term(1)})

    def boundary_defect(self) -> Endomorphism:
        g = self.layout.boundary
        return Endomorphism.from_images(self.ctx, {g: self.x(g) * self.plus_term(g).inverse()})


def check_delta_balance(c: int, m: int, limits: Optional[Limits] = None) -> CheckReport:
    """Balance of the forward and mirror pair constructions in F_(3m+c-2, c)."""
    layout = BlockLayout(c, m)
    builder = BalanceBuilder(layout, limits)
    report = CheckReport("delta-balance", {"c": c, "m": m, "rank": layout.rank})
    ybar = builder.ybar()
    for label, pairs in (
        ("forward", layout.forward_pairs()),
        ("mirror", layout.mirror_pairs()),
    ):
        parts = builder.construction(pairs)
        lhs = parts.xi1.compose(parts.alpha.compose(parts.beta))
        rhs = parts.xi2.compose(parts.beta.compose(parts.alpha))
        report.case(lhs == rhs, construction=label, check="balance", lhs=str(lhs), rhs=str(rhs))
        gamma = parts.gamma
        level = gamma.ia_level()
        report.case(level >= c - 1, construction=label, check="ia-level", level=level)
        report.case(
            all(gamma.apply(y) == y for y in ybar),
            construction=label,
            check="fixes-ybar",
            gamma=str(gamma),
        )
        report.case(
            gamma == builder.gamma_closed_form(pairs),
            construction=label,
            check="closed-form",
            gamma=str(gamma),
        )
        if label == "forward":
            bracket = automorphism_commutator(parts.beta, parts.alpha)
        else:
            gamma = gamma.invert()
            bracket = automorphism_commutator(parts.alpha, parts.beta)
        report.case(
            gamma == bracket,
            construction=label,
            check="commutator",
            gamma=str(gamma),
            bracket=str(bracket),
        )
    log.debug(f"delta balance c={c} m={m}: {len(report.failures)} failure(s)")
    return report.finish()


def check_epsilon_square(c: int, m: int, limits: Optional[Limits] = None) -> CheckReport:
    """epsilon epsilon^pi against delta^2 for the finite block swap pi.

    With finitely many blocks one minus generator, x_(3m), has no partner, so
    epsilon epsilon^pi = delta^2 zeta^2 where zeta only moves x_(3m). The check
    asserts agreement with delta^2 away from x_(3m), the exact identity with
    the boundary defect, and that the control pi = id is told apart.
    """
    layout = BlockLayout(c, m)
    builder = BalanceBuilder(layout, limits)
    report = CheckReport("epsilon-square", {"c": c, "m": m, "rank": layout.rank})
    gamma1 = builder.construction(layout.forward_pairs()).gamma
    gamma2 = builder.construction(layout.mirror_pairs()).gamma.invert()
    epsilon = gamma1.compose(gamma2)
    report.case(
        epsilon == builder.epsilon_closed_form(), check="epsilon", epsilon=str(epsilon)
    )
    pi = permutation(builder.ctx, layout.swap())
    window = epsilon.compose(conjugate(epsilon, pi))
    delta_square = power(builder.delta(), 2)
    expected_square = Endomorphism.from_images(
        builder.ctx, {1: builder.x(1) * builder.plus_term(1) ** 2}
    )
    report.case(delta_square == expected_square, check="delta-square", delta=str(delta_square))
    boundary = layout.boundary
    for i, (got, want) in enumerate(zip(window.images, delta_square.images), start=1):
        if i != boundary:
            report.case(got == want, check="agrees-with-delta-square", generator=i, got=str(got))
    report.case(
        window == delta_square.compose(power(builder.boundary_defect(), 2)),
        check="boundary-defect",
        window=str(window),
    )
    control = epsilon.compose(epsilon)
    if layout.swap():
        report.case(
            control != delta_square.compose(power(builder.boundary_defect(), 2)),
            check="control-distinguished",
            control=str(control),
        )
        report.finding(control="distinguished from the swapped product")
    else:
        report.finding(control="not applicable, the swap is the identity for one block")
    return report.finish()
