"""Randomized soundness of the normal form and of the morphism algebra."""

import logging
from typing import Optional

from nilpotra.group.context import GroupContext
from nilpotra.group.element import collect
from nilpotra.group.unitriangular import UnitriangularRepresentation
from nilpotra.lab.report import CheckReport
from nilpotra.lab.sampling import RandomSampler
from nilpotra.morphism.endomorphism import Endomorphism
from nilpotra.parameters import DEFAULT_SEED, DEFAULT_TRIALS, Limits

log = logging.getLogger(__name__)

ORACLE_TRIALS = 100


def check_normal_form_soundness(
    n: int = 3,
    c: int = 3,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    limits: Optional[Limits] = None,
) -> CheckReport:
    """collect is a homomorphism and a unitriangular oracle agrees with it.

    Every trial draws words u, v. The oracle, a fresh random unitriangular
    representation for each of the first ORACLE_TRIALS trials, must give the
    word uv and its normal form the same matrix.
    """
    report = CheckReport("nf-soundness", {"n": n, "c": c, "trials": trials}, seed=seed)
    ctx = GroupContext.get(n, c, limits)
    sampler = RandomSampler(seed)
    for trial in range(trials):
        u, v = sampler.word(n), sampler.word(n)
        cu, cv = collect(u, ctx), collect(v, ctx)
        uv = collect(u * v, ctx)
        report.case(uv == cu * cv, trial=trial, part="homomorphism", u=str(u), v=str(v))
        report.case(
            (cu * collect(u.inverse(), ctx)).is_identity(),
            trial=trial,
            part="inverse",
            u=str(u),
        )
        if trial < ORACLE_TRIALS:
            oracle = UnitriangularRepresentation(ctx, sampler.rng)
            report.case(
                oracle.evaluate_word(u * v) == oracle.evaluate(uv),
                trial=trial,
                part="oracle",
                u=str(u),
                v=str(v),
                normal_form=str(uv),
            )
    return report.finish()


def check_morphism_algebra(
    trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, limits: Optional[Limits] = None
) -> CheckReport:
    """Inversion, abelianization and lift-project laws for random automorphisms."""
    report = CheckReport("morphism-algebra", {"trials": trials}, seed=seed)
    sampler = RandomSampler(seed)
    ctx = GroupContext.get(3, 3, limits)
    quotient = GroupContext.get(3, 2, limits)
    identity = Endomorphism.identity(ctx)
    for trial in range(trials):
        f = sampler.automorphism(ctx)
        f_inverse = f.invert()
        report.case(
            f.compose(f_inverse) == identity and f_inverse.compose(f) == identity,
            trial=trial,
            part="invert",
            f=str(f),
        )
        h = sampler.automorphism(ctx)
        report.case(
            f.compose(h).abelianization_matrix()
            == f.abelianization_matrix() * h.abelianization_matrix(),
            trial=trial,
            part="abelianization",
            f=str(f),
            h=str(h),
        )
        g = sampler.automorphism(quotient)
        report.case(g.lift(3).project(2) == g, trial=trial, part="lift-project", g=str(g))
    log.debug(f"morphism algebra: {report.cases} case(s) over {trials} trial(s)")
    return report.finish()
