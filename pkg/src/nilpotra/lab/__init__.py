"""Checks of the identities used in arguments about free nilpotent groups."""

from typing import List

from nilpotra.lab.balance import check_delta_balance, check_epsilon_square
from nilpotra.lab.centre import check_center_props
from nilpotra.lab.report import CheckReport
from nilpotra.lab.runner import ALL, Suite, SuiteRunner
from nilpotra.lab.sampling import RandomSampler
from nilpotra.lab.shift import ShiftSystem, check_random_shift_claims, check_shift_claim
from nilpotra.lab.soundness import check_morphism_algebra, check_normal_form_soundness
from nilpotra.lab.substitution import (
    check_Lk_congruence,
    check_multilinearity,
    check_word_symmetry_setup,
    probe_glue_identity,
)

__all__: List[str] = [
    "ALL",
    "CheckReport",
    "RandomSampler",
    "ShiftSystem",
    "Suite",
    "SuiteRunner",
    "check_Lk_congruence",
    "check_center_props",
    "check_delta_balance",
    "check_epsilon_square",
    "check_morphism_algebra",
    "check_multilinearity",
    "check_normal_form_soundness",
    "check_random_shift_claims",
    "check_shift_claim",
    "check_word_symmetry_setup",
    "probe_glue_identity",
]
