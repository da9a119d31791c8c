"""
Integration tests for the nilpotra command-line application.
Tests the integration between:
- Command line argument parsing
- Word parsing and collection
- Endomorphism algebra
- Lemma-lab suite runner
- Text and JSON rendering, exit codes
"""

import io
import json
import unittest
from unittest.mock import patch

from nilpotra.cli import main


def run(*argv):
    """Run the command in-process and return (exit code, stdout, stderr)."""
    with patch("sys.stdout", new_callable=io.StringIO) as out:
        with patch("sys.stderr", new_callable=io.StringIO) as err:
            code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestNormalFormCommand(unittest.TestCase):
    def test_text(self):
        # Act
        code, out, _ = run("nf", "-n", "2", "-c", "2", "x2 x1")

        # Assert
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["x1       1  1", "x2       1  1", "[x2,x1]  2  1"])

    def test_json(self):
        # Act
        code, out, _ = run("nf", "-n", "2", "-c", "2", "--format", "json", "x2 x1")

        # Assert
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(
            {entry["commutator"]: entry["exp"] for entry in data["coords"]},
            {"x1": "1", "x2": "1", "[x2,x1]": "1"},
        )

    def test_identity(self):
        code, out, _ = run("nf", "-n", "2", "-c", "2", "")
        self.assertEqual((code, out.strip()), (0, "identity"))

    def test_left_normed_bracket(self):
        code, out, _ = run("nf", "-n", "2", "-c", "3", "[x2,x1,x1]")
        self.assertEqual(code, 0)
        self.assertEqual(out.split(), ["[[x2,x1],x1]", "3", "1"])

    def test_syntax_error(self):
        code, out, err = run("nf", "x1 ^^ 2")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("nilpotra: error:"))

    def test_generator_out_of_range(self):
        code, _, err = run("nf", "-n", "2", "x3")
        self.assertEqual(code, 2)
        self.assertIn("x3", err)

    def test_exponent_overflow(self):
        # Act
        code, out, err = run("nf", "x1^99999999999999999999")

        # Assert
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("nilpotra: error:"))

    def test_exponent_overflow_on_merge(self):
        code, _, err = run("nf", "x1^9223372036854775807 x1")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("nilpotra: error:"))

    def test_word_cap(self):
        code, _, _ = run("nf", "--max-word-len", "2", "x1 x2 x1")
        self.assertEqual(code, 3)

    def test_word_cap_from_environment(self):
        with patch.dict("os.environ", {"NILPOTRA_MAX_WORD_LEN": "2"}):
            code, _, _ = run("nf", "x1 x2 x1")
        self.assertEqual(code, 3)

    def test_invalid_rank(self):
        code, _, _ = run("nf", "-n", "0", "x1")
        self.assertEqual(code, 2)


class TestHallCommand(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(run("hall", "2", "3", "--counts")[1].strip(), "2,1,2")
        self.assertEqual(run("hall", "1", "3", "--counts")[1].strip(), "1,0,0")

    def test_listing(self):
        code, out, _ = run("hall", "2", "2")
        self.assertEqual(code, 0)
        self.assertEqual([line.split()[0] for line in out.splitlines()], ["x1", "x2", "[x2,x1]"])

    def test_json(self):
        data = json.loads(run("hall", "2", "3", "--format", "json")[1])
        self.assertEqual(data["counts"], [2, 1, 2])
        self.assertEqual(data["basis"][-1], {"commutator": "[[x2,x1],x2]", "weight": 3})

    def test_cap(self):
        self.assertEqual(run("hall", "3", "4", "--max-witt", "10")[0], 3)


class TestAutCommand(unittest.TestCase):
    def test_check(self):
        code, out, _ = run("aut", "check", "-n", "2", "-c", "2", "x1 -> x1 x2; x2 -> x2")
        self.assertEqual((code, out.strip()), (0, "true"))
        code, out, _ = run("aut", "check", "x1 -> x1^2")
        self.assertEqual((code, out.strip()), (0, "false"))

    def test_ia_level_of_identity(self):
        code, out, _ = run("aut", "ia-level", "-n", "2", "-c", "2", "x1 -> x1; x2 -> x2")
        self.assertEqual((code, out.strip()), (0, "2"))

    def test_apply(self):
        code, out, _ = run("aut", "apply", "x1 -> x1 x2", "x2 x1")
        self.assertEqual(code, 0)
        self.assertEqual(
            out.splitlines(), ["x1       1  1", "x2       1  2", "[x2,x1]  2  1"]
        )

    def test_invert_then_compose(self):
        # Arrange
        f = "x1 -> x1 x2; x2 -> x2 [x2,x1]"

        # Act
        code, out, _ = run("aut", "invert", "-c", "3", f)
        inverse = "; ".join(out.splitlines())
        compose_code, composed, _ = run("aut", "compose", "-c", "3", f, inverse)

        # Assert
        self.assertEqual((code, compose_code), (0, 0))
        self.assertEqual(composed.splitlines(), ["x1 -> x1", "x2 -> x2"])

    def test_invert_non_automorphism(self):
        code, _, err = run("aut", "invert", "x1 -> x1^2")
        self.assertEqual(code, 4)
        self.assertIn("determinant", err)

    def test_primitive(self):
        code, out, _ = run("aut", "primitive", "x1^2 x2")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "true")
        self.assertEqual(len(out.splitlines()), 3)

    def test_not_primitive(self):
        code, out, _ = run("aut", "primitive", "--format", "json", "x1^2 x2^2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {"primitive": False})


class TestVerifyCommand(unittest.TestCase):
    def test_shift_claim(self):
        code, out, _ = run("verify", "shift-claim", "--trials", "200", "--seed", "7")
        self.assertEqual(code, 0)
        self.assertTrue(out.splitlines()[0].startswith("PASS shift-claim"))
        self.assertTrue(out.splitlines()[-1].startswith("PASS received=1"))

    def test_unknown_suite(self):
        code, _, err = run("verify", "no-such-suite")
        self.assertEqual(code, 2)
        self.assertIn("no-such-suite", err)

    def test_json_is_deterministic(self):
        argv = ("verify", "nf-soundness", "--trials", "5", "--seed", "1", "--format", "json")
        first = run(*argv)[1]
        self.assertEqual(first, run(*argv)[1])
        self.assertNotIn("millis", first)
        self.assertEqual(json.loads(first)["verdict"], "pass")

    def test_timings(self):
        code, out, _ = run("verify", "shift-claim", "--trials", "3", "--timings")
        self.assertEqual(code, 0)
        self.assertIn("millis=", out)

    def test_suites(self):
        code, out, _ = run("suites")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 10)

    def test_missing_command(self):
        with patch("sys.stderr", new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as context:
                main([])
        self.assertEqual(context.exception.code, 2)
