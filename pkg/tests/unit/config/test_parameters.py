import unittest
from argparse import Namespace

from nilpotra.parameters import (
    DEFAULT_MAX_WITT,
    DEFAULT_MAX_WORD_LEN,
    MAX_WORD_LEN_ENV,
    Limits,
    RunConfig,
)


class TestLimits(unittest.TestCase):
    def test_defaults(self):
        limits = Limits.from_env(environ={})
        self.assertEqual(limits.max_word_len, DEFAULT_MAX_WORD_LEN)
        self.assertEqual(limits.max_witt, DEFAULT_MAX_WITT)

    def test_environment_overrides_default(self):
        limits = Limits.from_env(environ={MAX_WORD_LEN_ENV: "77"})
        self.assertEqual(limits.max_word_len, 77)

    def test_flag_overrides_environment(self):
        limits = Limits.from_env(max_word_len=5, environ={MAX_WORD_LEN_ENV: "77"})
        self.assertEqual(limits.max_word_len, 5)

    def test_invalid_environment(self):
        with self.assertRaises(ValueError):
            Limits.from_env(environ={MAX_WORD_LEN_ENV: "many"})

    def test_caps_must_be_positive(self):
        with self.assertRaises(ValueError):
            Limits(max_word_len=0)
        with self.assertRaises(ValueError):
            Limits(max_witt=-1)


class TestRunConfig(unittest.TestCase):
    def test_from_args(self):
        # Arrange
        args = Namespace(
            rank=3, nclass=4, seed=9, trials=10, max_word_len=None, max_witt=50, format="json"
        )

        # Act
        config = RunConfig.from_args(args, environ={MAX_WORD_LEN_ENV: "1000"})

        # Assert
        self.assertEqual((config.rank, config.nclass, config.seed, config.trials), (3, 4, 9, 10))
        self.assertEqual(config.limits, Limits(max_word_len=1000, max_witt=50))
        self.assertTrue(config.is_json)

    def test_from_partial_args(self):
        config = RunConfig.from_args(Namespace(), environ={})
        self.assertEqual(config, RunConfig(limits=Limits()))
        self.assertFalse(config.is_json)

    def test_validation(self):
        with self.assertRaises(ValueError):
            RunConfig(rank=0)
        with self.assertRaises(ValueError):
            RunConfig(trials=-1)
        with self.assertRaises(ValueError):
            RunConfig(output_format="yaml")
