import unittest

from nilpotra.group.series import TruncatedSeries, generalized_binomial


class TestGeneralizedBinomial(unittest.TestCase):
    def test_non_negative(self):
        self.assertEqual([generalized_binomial(4, k) for k in range(6)], [1, 4, 6, 4, 1, 0])

    def test_negative(self):
        self.assertEqual([generalized_binomial(-1, k) for k in range(4)], [1, -1, 1, -1])
        self.assertEqual([generalized_binomial(-2, k) for k in range(4)], [1, -2, 3, -4])

    def test_negative_k(self):
        self.assertEqual(generalized_binomial(3, -1), 0)


class TestTruncatedSeries(unittest.TestCase):
    def test_one(self):
        one = TruncatedSeries.one(3)
        self.assertTrue(one.is_one())
        self.assertIsNone(one.lowest_degree())
        self.assertEqual(len(one), 1)

    def test_letter_power(self):
        # Act
        series = TruncatedSeries.letter_power(3, 1, 2)

        # Assert
        self.assertEqual(series.homogeneous(1), {(1,): 2})
        self.assertEqual(series.homogeneous(2), {(1, 1): 1})
        self.assertEqual(series.homogeneous(3), {})

    def test_inverse(self):
        x = TruncatedSeries.letter_power(3, 1, 1)
        y = TruncatedSeries.letter_power(3, 2, 1)
        xy = x * y
        self.assertTrue((xy * xy.inverse()).is_one())
        self.assertTrue((xy.inverse() * xy).is_one())

    def test_power_matches_letter_power(self):
        x = TruncatedSeries.letter_power(4, 2, 1)
        self.assertEqual(x.power(-3), TruncatedSeries.letter_power(4, 2, -3))
        self.assertEqual(x.power(5), TruncatedSeries.letter_power(4, 2, 5))
        self.assertTrue(x.power(0).is_one())

    def test_power_needs_unit_constant(self):
        with self.assertRaises(ValueError):
            TruncatedSeries(2, [{(): 2}, {}, {}]).power(2)

    def test_commutator_leading_term(self):
        # Arrange
        x = TruncatedSeries.letter_power(3, 1, 1)
        y = TruncatedSeries.letter_power(3, 2, 1)

        # Act
        series = y.commutator(x)

        # Assert
        self.assertEqual(series.lowest_degree(), 2)
        self.assertEqual(series.homogeneous(2), {(2, 1): 1, (1, 2): -1})

    def test_truncation(self):
        x = TruncatedSeries.letter_power(2, 1, 1)
        self.assertEqual(len(x * x * x), 3)
        self.assertEqual((x * x * x).homogeneous(2), {(1, 1): 3})

    def test_from_polynomial(self):
        series = TruncatedSeries.from_polynomial(2, {(1,): 1, (1, 2, 3): 7})
        self.assertEqual(len(series), 2)
        self.assertEqual(series.lowest_degree(), 1)
