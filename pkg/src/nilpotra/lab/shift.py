"""The shift system f -> f + alpha e_0 + sum beta_j (e_j - e_(j+1)).

The state is a distinguished vector f plus a finitely supported integer vector
over the basis e_k (k in Z). The map shifts every e_k to e_(k+1) and adds a
fixed vector to f, so after n steps f has accumulated g_n.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from nilpotra.errors import PreconditionError
from nilpotra.lab.report import CheckReport
from nilpotra.parameters import DEFAULT_SEED, DEFAULT_TRIALS

log = logging.getLogger(__name__)

Vector = Dict[int, int]


def _clean(v: Vector) -> Vector:
    return {k: a for k, a in sorted(v.items()) if a}


@dataclass(frozen=True)
class ShiftSystem:
    alpha: int
    betas: Tuple[int, ...] = field(default_factory=tuple)

    def increment(self) -> Vector:
        """alpha e_0 + sum_j beta_j (e_j - e_(j+1))."""
        v: Vector = {0: self.alpha}
        for j, beta in enumerate(self.betas):
            v[j] = v.get(j, 0) + beta
            v[j + 1] = v.get(j + 1, 0) - beta
        return _clean(v)

    def step(self, state: Tuple[int, Vector]) -> Tuple[int, Vector]:
        """One application to (f coefficient, e-part)."""
        f, vector = state
        moved = {k + 1: a for k, a in vector.items()}
        for k, a in self.increment().items():
            moved[k] = moved.get(k, 0) + f * a
        return f, _clean(moved)

    def iterate(self, n: int) -> Vector:
        """e-part of the n-th image of f, by repeated application."""
        state: Tuple[int, Vector] = (1, {})
        for _ in range(n):
            state = self.step(state)
        return state[1]

    def closed_form(self, n: int) -> Vector:
        """sum_(i<n) alpha e_i + sum_j beta_j (e_j - e_(j+n))."""
        g: Vector = {i: self.alpha for i in range(n)}
        for j, beta in enumerate(self.betas):
            g[j] = g.get(j, 0) + beta
            g[j + n] = g.get(j + n, 0) - beta
        return _clean(g)


def check_shift_claim(
    system: ShiftSystem, n: int, report: Optional[CheckReport] = None
) -> CheckReport:
    """g_n from iteration equals the closed form and has at least n nonzero entries."""
    if system.alpha == 0:
        raise PreconditionError("alpha must be nonzero")
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    standalone = report is None
    if report is None:
        report = CheckReport(
            "shift-claim", {"alpha": system.alpha, "betas": list(system.betas), "n": n}
        )
    iterated = system.iterate(n)
    closed = system.closed_form(n)
    report.case(
        iterated == closed and len(iterated) >= n,
        alpha=system.alpha,
        betas=list(system.betas),
        n=n,
        iterated=iterated,
        closed_form=closed,
    )
    return report.finish() if standalone else report


def random_shift_system(rng: random.Random, bound: int = 5, max_r: int = 6) -> ShiftSystem:
    """A random shift system with coefficients in [-bound, bound]."""
    alpha = rng.choice([a for a in range(-bound, bound + 1) if a])
    length = rng.randint(0, max_r + 1)
    return ShiftSystem(alpha, tuple(rng.randint(-bound, bound) for _ in range(length)))


def check_random_shift_claims(
    trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, max_n: int = 12
) -> CheckReport:
    """Seeded random systems plus the boundary case alpha=1, betas=(-1,), n=2."""
    report = CheckReport("shift-claim", {"trials": trials, "max_n": max_n}, seed=seed)
    rng = random.Random(seed)
    boundary = ShiftSystem(1, (-1,))
    check_shift_claim(boundary, 2, report)
    report.case(boundary.iterate(2) == {1: 1, 2: 1}, boundary=boundary.iterate(2))
    for _ in range(trials):
        check_shift_claim(random_shift_system(rng), rng.randint(1, max_n), report)
    log.debug(f"shift claim: {report.cases} case(s), {len(report.failures)} failure(s)")
    return report.finish()
