"""Run lemma-lab suites by id and keep track of their outcomes.

Each suite binds a check function to its default parameter grid; the seed,
trial count and resource caps come from the run configuration.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, List, Optional

from nilpotra.lab.balance import check_delta_balance, check_epsilon_square
from nilpotra.lab.centre import check_center_props
from nilpotra.lab.report import CheckReport
from nilpotra.lab.shift import check_random_shift_claims
from nilpotra.lab.soundness import check_morphism_algebra, check_normal_form_soundness
from nilpotra.lab.substitution import (
    check_Lk_congruence,
    check_multilinearity,
    check_word_symmetry_setup,
    probe_glue_identity,
)
from nilpotra.parameters import RunConfig

ALL = "all"


@dataclass(frozen=True)
class Suite:
    """A named family of checks run over a fixed parameter grid."""

    id: str
    description: str
    run: Callable[[RunConfig], List[CheckReport]]


def _grid(
    check: Callable[..., CheckReport], cs: List[int], ks: List[int]
) -> Callable[[RunConfig], List[CheckReport]]:
    def run(config: RunConfig) -> List[CheckReport]:
        return [check(c, k, limits=config.limits) for c, k in product(cs, ks)]

    return run


def _default_suites() -> List[Suite]:
    return [
        Suite(
            "center-props",
            "centre of F_{n,c} and the IA filtration, (n,c) in {(2,2),(3,3)}",
            lambda config: [
                check_center_props(n, c, config.trials, config.seed, config.limits)
                for n, c in ((2, 2), (3, 3))
            ],
        ),
        Suite(
            "delta-balance",
            "balanced products of pair automorphisms, c in {3,4}, m in {1,2}",
            _grid(check_delta_balance, [3, 4], [1, 2]),
        ),
        Suite(
            "epsilon-square",
            "epsilon epsilon^pi against delta^2 with the boundary defect",
            _grid(check_epsilon_square, [3, 4], [1, 2]),
        ),
        Suite(
            "glue-probe",
            "advisory side-by-side exponents of the glued substitution identity",
            _grid(probe_glue_identity, [2, 3, 4], [1, 2, 3]),
        ),
        Suite(
            "lk-congruence",
            "substitution differences of weight-c commutators divisible by k",
            _grid(check_Lk_congruence, [2, 3, 4], [1, 2, 3, 4, 5]),
        ),
        Suite(
            "morphism-algebra",
            "inversion, abelianization and lift/project of random automorphisms",
            lambda config: [check_morphism_algebra(config.trials, config.seed, config.limits)],
        ),
        Suite(
            "multilinearity",
            "power substitutions scale weight-c basic commutators",
            _grid(check_multilinearity, [2, 3, 4], [1, 2, 3, 5]),
        ),
        Suite(
            "nf-soundness",
            "collection is a homomorphism and agrees with unitriangular images",
            lambda config: [
                check_normal_form_soundness(3, 3, config.trials, config.seed, config.limits)
            ],
        ),
        Suite(
            "shift-claim",
            "iterated shift systems against their closed form",
            lambda config: [check_random_shift_claims(config.trials, config.seed)],
        ),
        Suite(
            "word-symmetry",
            "swap-symmetric two-variable words under substitution",
            lambda config: [
                check_word_symmetry_setup(c, seed=config.seed, limits=config.limits)
                for c in (2, 3, 4)
            ],
        ),
    ]


class SuiteRunner:
    """Run suites and count their reports.

    Usage:
        with SuiteRunner(config) as runner:
            reports = runner.run("all")
    """

    # Counter names
    RECEIVED = "received"  # number of reports produced
    PASSED = "passed"  # asserted reports without failure
    FAILED = "failed"  # asserted reports with at least one failure
    ADVISORY = "advisory"  # reports of advisory probes
    _COUNTER_LIST = (RECEIVED, PASSED, FAILED, ADVISORY)

    LOGGER_NAME = "SuiteRunner"

    log: logging.Logger
    config: RunConfig
    suites: Dict[str, Suite]
    counters: Dict[str, int]

    def __init__(self, config: RunConfig, parent_logger: Optional[str] = None) -> None:
        self.config = config
        self.suites = {suite.id: suite for suite in _default_suites()}
        self.counters = {counter: 0 for counter in SuiteRunner._COUNTER_LIST}
        self.log = logging.getLogger(
            ".".join(filter(None, [parent_logger, SuiteRunner.LOGGER_NAME]))
        )

    def __enter__(self) -> "SuiteRunner":
        return self

    def __exit__(self, *args: Any) -> None:
        self.log.info(self.summary())

    def ids(self) -> List[str]:
        return sorted(self.suites)

    def register(self, suite: Suite) -> None:
        self.suites[suite.id] = suite

    def get_counters(self) -> Dict[str, int]:
        return self.counters

    def run(self, suite_id: str) -> List[CheckReport]:
        """Run one suite, or every suite in id order for ``all``.

        Raises:
            KeyError: ``suite_id`` is neither a registered id nor ``all``
        """
        if suite_id == ALL:
            selected = [self.suites[i] for i in self.ids()]
        elif suite_id in self.suites:
            selected = [self.suites[suite_id]]
        else:
            raise KeyError(suite_id)
        reports: List[CheckReport] = []
        for suite in selected:
            self.log.info(f"suite {suite.id}: start")
            produced = suite.run(self.config)
            for report in produced:
                self._count(report)
            failed = sum(1 for r in produced if r.asserted and not r.passed)
            self.log.info(f"suite {suite.id}: {len(produced)} report(s), {failed} failed")
            reports.extend(produced)
        return reports

    def _count(self, report: CheckReport) -> None:
        self.counters[SuiteRunner.RECEIVED] += 1
        if not report.asserted:
            self.counters[SuiteRunner.ADVISORY] += 1
        elif report.passed:
            self.counters[SuiteRunner.PASSED] += 1
        else:
            self.counters[SuiteRunner.FAILED] += 1
            self.log.warning(f"{report}: {len(report.failures)} failing case(s)")

    @property
    def passed(self) -> bool:
        return self.counters[SuiteRunner.FAILED] == 0

    def summary(self) -> str:
        return ", ".join(
            f"{counter}={self.counters[counter]}" for counter in SuiteRunner._COUNTER_LIST
        )
