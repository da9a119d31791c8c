import random
import unittest

from nilpotra.errors import PreconditionError
from nilpotra.lab.shift import (
    ShiftSystem,
    check_random_shift_claims,
    check_shift_claim,
    random_shift_system,
)


class TestShiftSystem(unittest.TestCase):
    def test_increment(self):
        self.assertEqual(ShiftSystem(2, (1, -3)).increment(), {0: 3, 1: -4, 2: 3})

    def test_boundary_case(self):
        # Arrange
        system = ShiftSystem(1, (-1,))

        # Act & Assert
        self.assertEqual(system.iterate(1), {1: 1})
        self.assertEqual(system.iterate(2), {1: 1, 2: 1})
        self.assertEqual(system.closed_form(2), {1: 1, 2: 1})

    def test_no_betas(self):
        self.assertEqual(ShiftSystem(-2).iterate(3), {0: -2, 1: -2, 2: -2})

    def test_iteration_matches_closed_form(self):
        rng = random.Random(1)
        for _ in range(50):
            system = random_shift_system(rng)
            for n in range(1, 9):
                with self.subTest(system=system, n=n):
                    self.assertEqual(system.iterate(n), system.closed_form(n))
                    self.assertGreaterEqual(len(system.iterate(n)), n)


class TestShiftChecks(unittest.TestCase):
    def test_single_claim(self):
        report = check_shift_claim(ShiftSystem(3, (1, 2, -5)), 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases, 1)
        self.assertIsNotNone(report.millis)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            check_shift_claim(ShiftSystem(0, (1,)), 2)
        with self.assertRaises(PreconditionError):
            check_shift_claim(ShiftSystem(1), 0)

    def test_random_claims(self):
        report = check_random_shift_claims(trials=200, seed=7)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.cases, 202)
        self.assertEqual(report.seed, 7)

    def test_random_claims_are_deterministic(self):
        first = check_random_shift_claims(trials=30, seed=3).toDict()
        self.assertEqual(first, check_random_shift_claims(trials=30, seed=3).toDict())
