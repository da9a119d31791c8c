import unittest

from nilpotra.errors import PreconditionError
from nilpotra.group.element import NilpotentElement, commutator
from nilpotra.lab.balance import (
    BalanceBuilder,
    BlockLayout,
    check_delta_balance,
    check_epsilon_square,
)
from nilpotra.morphism.endomorphism import automorphism_commutator


class TestBlockLayout(unittest.TestCase):
    def test_layout(self):
        # Act
        layout = BlockLayout(4, 2)

        # Assert
        self.assertEqual(layout.rank, 8)
        self.assertEqual(layout.ybar, (7, 8))
        self.assertEqual(layout.boundary, 6)
        self.assertEqual(layout.forward_pairs(), [(1, 2), (4, 5)])
        self.assertEqual(layout.mirror_pairs(), [(3, 2), (6, 5)])
        self.assertEqual(layout.swap(), {3: 4, 4: 3})

    def test_single_block_has_no_swap(self):
        self.assertEqual(BlockLayout(3, 1).swap(), {})

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            BlockLayout(2, 1)
        with self.assertRaises(PreconditionError):
            BlockLayout(3, 0)


class TestBalanceBuilder(unittest.TestCase):
    def setUp(self):
        self.builder = BalanceBuilder(BlockLayout(3, 1))
        self.ctx = self.builder.ctx

    def test_alpha_and_beta(self):
        # Act
        parts = self.builder.construction([(1, 2)])

        # Assert
        x1, x2, x4 = (NilpotentElement.generator(self.ctx, i) for i in (1, 2, 4))
        self.assertEqual(parts.alpha(x1), x1 * commutator(x2, x1))
        self.assertEqual(parts.beta(x2), x2 * commutator(x1, x4))
        self.assertEqual(parts.alpha(x2), x2)

    def test_gamma_is_a_commutator_of_automorphisms(self):
        parts = self.builder.construction([(1, 2)])
        self.assertEqual(parts.gamma, automorphism_commutator(parts.beta, parts.alpha))
        self.assertEqual(parts.gamma.ia_level(), 2)

    def test_delta(self):
        delta = self.builder.delta()
        x1 = NilpotentElement.generator(self.ctx, 1)
        x4 = NilpotentElement.generator(self.ctx, 4)
        self.assertEqual(delta(x1), x1 * commutator(x1, x4, x1))


class TestBalanceChecks(unittest.TestCase):
    def test_delta_balance(self):
        for m in (1, 2):
            with self.subTest(m=m):
                report = check_delta_balance(3, m)
                self.assertTrue(report.passed, report.failures)
                self.assertEqual(report.params["rank"], 3 * m + 1)

    def test_epsilon_square_single_block(self):
        # Act
        report = check_epsilon_square(3, 1)

        # Assert
        self.assertTrue(report.passed, report.failures)
        self.assertIn("not applicable", report.findings[0]["control"])

    def test_epsilon_square_two_blocks(self):
        # Act
        report = check_epsilon_square(3, 2)

        # Assert
        self.assertTrue(report.passed, report.failures)
        self.assertIn("distinguished", report.findings[0]["control"])

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            check_delta_balance(2, 1)
