import unittest

from nilpotra.errors import PreconditionError
from nilpotra.group.context import GroupContext
from nilpotra.group.element import NilpotentElement, commutator
from nilpotra.lab.centre import check_center_props, commutation_witness
from nilpotra.morphism.endomorphism import Endomorphism, ia_automorphism, inner


class TestCommutationWitness(unittest.TestCase):
    def test_shallow_automorphism_has_a_witness(self):
        # Arrange
        ctx = GroupContext.get(2, 3)
        x1, x2 = NilpotentElement.generator(ctx, 1), NilpotentElement.generator(ctx, 2)
        alpha = ia_automorphism(ctx, {1: commutator(x2, x1)})

        # Act
        witness = commutation_witness(alpha)

        # Assert
        self.assertEqual(witness, 1)
        tau = inner(x1)
        self.assertNotEqual(alpha.compose(tau), tau.compose(alpha))

    def test_deep_automorphism_has_none(self):
        ctx = GroupContext.get(2, 3)
        x1, x2 = NilpotentElement.generator(ctx, 1), NilpotentElement.generator(ctx, 2)
        alpha = ia_automorphism(ctx, {2: commutator(x2, x1, x1)})
        self.assertIsNone(commutation_witness(alpha))
        self.assertIsNone(commutation_witness(Endomorphism.identity(ctx)))


class TestCenterProps(unittest.TestCase):
    def test_small_groups(self):
        for n, c in ((2, 2), (3, 3)):
            with self.subTest(n=n, c=c):
                report = check_center_props(n, c, trials=8, seed=1)
                self.assertTrue(report.passed, report.failures)

    def test_no_trials_is_vacuous(self):
        report = check_center_props(2, 2, trials=0)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases, 0)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            check_center_props(1, 2, trials=1)
