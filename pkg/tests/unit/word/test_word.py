import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from nilpotra.errors import GeneratorRangeError, WordOverflowError
from nilpotra.word.word import (
    EXPONENT_MAX,
    Word,
    commutator_word,
    format_word,
    free_reduce,
    left_normed_word,
)

letters = st.lists(
    st.tuples(st.integers(min_value=1, max_value=4), st.integers(min_value=-3, max_value=3)),
    max_size=20,
)


class TestWord(unittest.TestCase):
    """
    reduction unit tests
    """

    def test_adjacent_letters_merge(self):
        # Act
        word = Word([(1, 2), (1, 3), (2, 1)])

        # Assert
        self.assertEqual(word.letters, ((1, 5), (2, 1)))

    def test_cancellation_cascades(self):
        # Act
        word = Word([(1, 1), (2, 1), (2, -1), (1, -1)])

        # Assert
        self.assertTrue(word.is_identity())
        self.assertEqual(len(word), 0)

    def test_zero_exponents_are_dropped(self):
        self.assertEqual(Word([(1, 0), (2, 1), (3, 0)]), Word.generator(2))

    def test_generator_index_must_be_positive(self):
        with self.assertRaises(GeneratorRangeError):
            Word([(0, 1)])

    def test_exponent_overflow(self):
        # Arrange
        big = Word.generator(1, EXPONENT_MAX)

        # Act & Assert
        with self.assertRaises(WordOverflowError):
            big * Word.generator(1)

    def test_free_reduce_of_raw_letters(self):
        self.assertEqual(free_reduce([(3, 1), (3, -1), (1, 2)]), Word.generator(1, 2))

    """
    group operations unit tests
    """

    def test_inverse_reverses_and_negates(self):
        # Arrange
        word = Word([(1, 2), (2, -1)])

        # Act & Assert
        self.assertEqual(word.inverse().letters, ((2, 1), (1, -2)))
        self.assertEqual(~word, word.inverse())

    def test_power(self):
        # Arrange
        word = Word([(1, 1), (2, 1)])

        # Act & Assert
        self.assertEqual((word**3).letters, ((1, 1), (2, 1)) * 3)
        self.assertEqual(word**-1, word.inverse())
        self.assertTrue((word**0).is_identity())

    def test_letter_count_and_max_generator(self):
        # Arrange
        word = Word([(3, -2), (1, 1)])

        # Act & Assert
        self.assertEqual(word.letter_count(), 3)
        self.assertEqual(word.max_generator(), 3)
        self.assertEqual(Word().max_generator(), 0)

    def test_commutator_word(self):
        # Arrange
        x1, x2 = Word.generator(1), Word.generator(2)

        # Act
        word = commutator_word(x2, x1)

        # Assert
        self.assertEqual(word.letters, ((2, 1), (1, 1), (2, -1), (1, -1)))

    def test_left_normed_word_nests_to_the_left(self):
        # Arrange
        x1, x2 = Word.generator(1), Word.generator(2)

        # Act & Assert
        self.assertEqual(
            left_normed_word(x2, x1, x1), commutator_word(commutator_word(x2, x1), x1)
        )
        with self.assertRaises(ValueError):
            left_normed_word(x1)

    def test_commutator_of_commuting_words_is_trivial(self):
        x1 = Word.generator(1)
        self.assertTrue(commutator_word(x1**2, x1**-5).is_identity())

    """
    formatting unit tests
    """

    def test_format_word(self):
        self.assertEqual(format_word(Word([(1, 2), (2, 1), (1, -1)])), "x1^2 x2 x1^-1")
        self.assertEqual(format_word(Word()), "")
        self.assertEqual(str(Word.generator(12)), "x12")

    """
    properties
    """

    @settings(max_examples=200, deadline=None)
    @given(letters)
    def test_reduction_is_idempotent(self, raw):
        word = Word(raw)
        self.assertEqual(Word(word.letters), word)
        for (g, e), (h, _) in zip(word.letters, word.letters[1:]):
            self.assertNotEqual(g, h)
            self.assertNotEqual(e, 0)

    @settings(max_examples=200, deadline=None)
    @given(letters, letters, letters)
    def test_group_axioms(self, a, b, c):
        u, v, w = Word(a), Word(b), Word(c)
        self.assertEqual((u * v) * w, u * (v * w))
        self.assertTrue((u * u.inverse()).is_identity())
        self.assertEqual(u * Word.identity(), u)
        self.assertEqual((u * v).inverse(), v.inverse() * u.inverse())

    @settings(max_examples=100, deadline=None)
    @given(letters)
    def test_equal_words_hash_equally(self, raw):
        self.assertEqual(hash(Word(raw)), hash(Word(list(Word(raw).letters))))
