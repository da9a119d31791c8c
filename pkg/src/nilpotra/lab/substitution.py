"""Substitution identities of weight-c commutators in two generators.

Weight-c commutators are central and multilinear in class c, so substituting
z^k for a generator z scales a basic commutator b by k ** nu_z(b). The checks
here confirm this by actual collection, probe the glued identity built from
it, check the k-th power congruence of substitutions and the symmetry
argument for two-variable words.
"""

import logging
from typing import Iterable, List, Optional

from nilpotra.errors import PreconditionError
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, collect
from nilpotra.hall.commutator import nu
from nilpotra.lab.report import CheckReport
from nilpotra.lab.sampling import RandomSampler
from nilpotra.morphism.endomorphism import Endomorphism, permutation
from nilpotra.parameters import DEFAULT_SEED, Limits
from nilpotra.word.word import Word, left_normed_word

log = logging.getLogger(__name__)


def _require(c: int, k: int) -> None:
    if c < 2:
        raise PreconditionError(f"class must be at least 2, got {c}")
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")


def _scalings(ctx: GroupContext, k: int) -> List[Endomorphism]:
    """z -> z^k, y -> y^k and both, with z = x1 and y = x2."""
    z_k = NilpotentElement.generator(ctx, 1, k)
    y_k = NilpotentElement.generator(ctx, 2, k)
    return [
        Endomorphism.from_images(ctx, {1: z_k}),
        Endomorphism.from_images(ctx, {2: y_k}),
        Endomorphism.from_images(ctx, {1: z_k, 2: y_k}),
    ]


def check_multilinearity(c: int, k: int, limits: Optional[Limits] = None) -> CheckReport:
    """Substitution of scaled arguments into weight-c commutators at level k."""
    _require(c, k)
    report = CheckReport("multilinearity", {"c": c, "k": k})
    ctx = GroupContext.get(2, c, limits)
    scale_z, scale_y, scale_both = _scalings(ctx, k)
    for pos in ctx.basis.positions_of_weight(c):
        tree = ctx.basis[pos]
        b = NilpotentElement.basis_element(ctx, pos)
        for label, f, exponent in (
            ("z^k", scale_z, k ** nu(tree, 1)),
            ("y^k", scale_y, k ** nu(tree, 2)),
            ("z^k,y^k", scale_both, k**c),
        ):
            got = f.apply(b)
            report.case(
                got == b**exponent,
                commutator=str(tree),
                substitution=label,
                expected_exp=exponent,
                got=str(got),
            )
    return report.finish()


def probe_glue_identity(
    c: int, k: int, word: Optional[Word] = None, limits: Optional[Limits] = None
) -> CheckReport:
    """Compare v(z^k,y) v(z,y^k) with v^(k^c) for every weight-c basic v.

    The probe is advisory. It fails only when collection disagrees with the
    exponent k^nu_z + k^nu_y predicted by multilinearity; each finding row says
    whether the glued equality itself holds.
    """
    _require(c, k)
    report = CheckReport("glue-probe", {"c": c, "k": k}, asserted=False)
    ctx = GroupContext.get(2, c, limits)
    scale_z, scale_y, _ = _scalings(ctx, k)
    square_z, square_y, _ = _scalings(ctx, 2)
    squares_force_identity = True
    for pos in ctx.basis.positions_of_weight(c):
        tree = ctx.basis[pos]
        b = NilpotentElement.basis_element(ctx, pos)
        nu_z, nu_y = nu(tree, 1), nu(tree, 2)
        lhs = scale_z.apply(b) * scale_y.apply(b)
        lhs_exp = lhs.coordinate(pos)
        predicted = k**nu_z + k**nu_y
        report.case(
            lhs == b**lhs_exp and lhs_exp == predicted,
            commutator=str(tree),
            predicted_exp=predicted,
            lhs=str(lhs),
        )
        report.finding(
            commutator=str(tree),
            nu_z=nu_z,
            nu_y=nu_y,
            lhs_exp=lhs_exp,
            rhs_exp=k**c,
            holds=lhs == b ** (k**c),
        )
        if square_z.apply(b) == b**2 and square_y.apply(b) == b**2:
            squares_force_identity = False
    report.finding(square_relations_force_identity=squares_force_identity)
    if word is not None:
        v = collect(word, ctx)
        if v.weight_filtration() < c:
            raise PreconditionError(f"{word} does not lie in N_{c}")
        lhs = scale_z.apply(v) * scale_y.apply(v)
        rhs = v ** (k**c)
        report.finding(word=str(word), lhs=str(lhs), rhs=str(rhs), holds=lhs == rhs)
    return report.finish()


def check_Lk_congruence(
    c: int, k: int, w: Optional[Word] = None, limits: Optional[Limits] = None
) -> CheckReport:
    """w(x1 x2^k, x2) w(x1, x2)^-1 has every coordinate divisible by k.

    Without ``w`` every weight-c basic commutator on two generators is checked.
    """
    _require(c, k)
    ctx = GroupContext.get(2, c, limits)
    words: Iterable[Word]
    if w is None:
        words = [ctx.basis[pos].to_word() for pos in ctx.basis.positions_of_weight(c)]
    else:
        words = [w]
    report = CheckReport("lk-congruence", {"c": c, "k": k})
    substitution = Endomorphism.from_images(
        ctx,
        {1: NilpotentElement.generator(ctx, 1) * NilpotentElement.generator(ctx, 2, k)},
    )
    for word in words:
        v = collect(word, ctx)
        if v.weight_filtration() < c:
            raise PreconditionError(f"{word} does not lie in N_{c}")
        difference = substitution.apply(v) * v.inverse()
        report.case(
            difference.weight_filtration() >= c
            and all(exp % k == 0 for exp in difference.coords.values()),
            word=str(word),
            difference=str(difference),
        )
    return report.finish()


def _swap_word(word: Word) -> Word:
    return Word((3 - gen, exp) for gen, exp in word)


def symmetry_samples(c: int, sampler: RandomSampler, samples: int) -> List[Word]:
    """Fixed examples followed by random products u swap(u) and controls u."""
    x1, x2 = Word.generator(1), Word.generator(2)
    words = [left_normed_word(x2, x1) * left_normed_word(x1, x2)]
    if c >= 3:
        words.append(
            left_normed_word(x2, x1, x1) * left_normed_word(x1, x2, x2).inverse()
        )
    words.append(left_normed_word(*([x2, x1] + [x1] * (c - 2))))
    for _ in range(samples):
        u = left_normed_word(*(Word.generator(sampler.rng.randint(1, 2)) for _ in range(c)))
        words.append(u * _swap_word(u))
        words.append(u)
    return words


def check_word_symmetry_setup(
    c: int,
    samples: int = 4,
    seed: int = DEFAULT_SEED,
    substitutions: int = 3,
    limits: Optional[Limits] = None,
) -> CheckReport:
    """A word fixed by x1 <-> x2 in F_{2,c} satisfies w(a,b) = w(b,a) in F_{3,c}."""
    if c < 2:
        raise PreconditionError(f"class must be at least 2, got {c}")
    report = CheckReport(
        "word-symmetry", {"c": c, "samples": samples}, seed=seed
    )
    sampler = RandomSampler(seed)
    pair_ctx = GroupContext.get(2, c, limits)
    wide_ctx = GroupContext.get(3, c, limits)
    swap = permutation(pair_ctx, {1: 2, 2: 1})
    for word in symmetry_samples(c, sampler, samples):
        v = collect(word, pair_ctx)
        symmetric = swap.apply(v) == v
        report.finding(word=str(word), symmetric=symmetric)
        if not symmetric:
            continue
        v_wide = collect(word, wide_ctx)
        for _ in range(substitutions):
            a, b = sampler.element(wide_ctx), sampler.element(wide_ctx)
            w_ab = Endomorphism.from_images(wide_ctx, {1: a, 2: b}).apply(v_wide)
            w_ba = Endomorphism.from_images(wide_ctx, {1: b, 2: a}).apply(v_wide)
            report.case(w_ab == w_ba, word=str(word), a=str(a), b=str(b))
    log.debug(f"word symmetry c={c}: {report.cases} substitution(s)")
    return report.finish()
