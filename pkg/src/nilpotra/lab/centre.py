"""Properties of the centre N_c of F_{n,c} and of the IA filtration.

For random samples the check confirms that

* elements of N_c are central, have trivial inner automorphism and lie in
  weight at least c, and tau_a is trivial exactly when a is central;
* IA automorphisms fix N_c and IA_(c-1) fixes N_2;
* IA_(c-1) commutes with IA;
* an automorphism of IA level below c-1 fails to commute with tau_(x_i) for
  some generator x_i, the witness being found explicitly;
* sigma tau_a sigma^-1 = tau_(sigma(a)).
"""

import logging
from typing import Optional

from nilpotra.errors import PreconditionError
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement
from nilpotra.lab.report import CheckReport
from nilpotra.lab.sampling import RandomSampler
from nilpotra.morphism.endomorphism import Endomorphism, conjugate, inner
from nilpotra.parameters import DEFAULT_SEED, DEFAULT_TRIALS, Limits

log = logging.getLogger(__name__)


def commutation_witness(alpha: Endomorphism) -> Optional[int]:
    """Index i with alpha tau_(x_i) != tau_(x_i) alpha, None if there is none.

    alpha tau_a alpha^-1 = tau_(alpha(a)), so the two commute iff
    alpha(a) a^-1 is central; generators whose tail lies outside N_c qualify.
    """
    ctx = alpha.ctx
    for i in range(1, ctx.rank + 1):
        x = NilpotentElement.generator(ctx, i)
        if not (alpha.apply(x) * x.inverse()).is_central():
            return i
    return None


def check_center_props(
    n: int,
    c: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    limits: Optional[Limits] = None,
) -> CheckReport:
    """Centre, inner kernel and IA-filtration properties over random samples."""
    if n < 2 or c < 2:
        raise PreconditionError(f"rank and class must be at least 2, got n={n} c={c}")
    report = CheckReport("center-props", {"n": n, "c": c, "trials": trials}, seed=seed)
    ctx = GroupContext.get(n, c, limits)
    sampler = RandomSampler(seed)
    for trial in range(trials):
        s = sampler.deep_element(ctx, c)
        report.case(
            s.is_central() and inner(s).is_identity() and s.weight_filtration() >= c,
            trial=trial,
            part="centre",
            element=str(s),
        )
        a = sampler.element(ctx)
        report.case(
            inner(a).is_identity() == a.is_central() == (a.weight_filtration() >= c),
            trial=trial,
            part="inner-kernel",
            element=str(a),
        )

        f = sampler.ia_automorphism(ctx, 1)
        report.case(f.apply(s) == s, trial=trial, part="ia-fixes-centre", f=str(f))
        eta = sampler.ia_automorphism(ctx, c - 1)
        u = sampler.deep_element(ctx, 2)
        report.case(eta.apply(u) == u, trial=trial, part="deep-ia-fixes-n2", eta=str(eta))
        report.case(
            eta.compose(f) == f.compose(eta),
            trial=trial,
            part="deep-ia-commutes",
            f=str(f),
            eta=str(eta),
        )

        if c >= 3 and f.ia_level() < c - 1:
            witness = commutation_witness(f)
            ok = witness is not None
            if witness is not None:
                tau = inner(NilpotentElement.generator(ctx, witness))
                ok = f.compose(tau) != tau.compose(f)
            report.case(ok, trial=trial, part="shallow-ia-witness", f=str(f), witness=witness)

        sigma = sampler.automorphism(ctx)
        report.case(
            conjugate(inner(a), sigma) == inner(sigma.apply(a)),
            trial=trial,
            part="conjugated-inner",
            sigma=str(sigma),
            element=str(a),
        )
    log.debug(f"centre properties n={n} c={c}: {report.cases} case(s)")
    return report.finish()
