import unittest

from nilpotra.lab.report import CheckReport


class TestCheckReport(unittest.TestCase):
    def test_init_Verdict_instance(self):
        self.assertSetEqual(set(CheckReport.Verdict.values()), {"pass", "fail"})
        self.assertEqual(str(CheckReport.Verdict.FAIL), "fail")

    def test_passing_report(self):
        # Arrange
        report = CheckReport("demo", {"c": 3}, seed=5)

        # Act
        report.case(True, value=1)
        report.case(True, value=2)
        report.finish()

        # Assert
        self.assertTrue(report.passed)
        self.assertEqual(report.verdict, CheckReport.Verdict.PASS)
        self.assertEqual(report.cases, 2)
        self.assertIsNotNone(report.millis)
        self.assertEqual(str(report), "PASS demo c=3 cases=2")

    def test_failure_keeps_the_witness(self):
        # Arrange
        report = CheckReport("demo")

        # Act
        ok = report.case(False, word="x1 x2", exp=3)

        # Assert
        self.assertFalse(ok)
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, [{"word": "x1 x2", "exp": 3}])

    def test_to_dict_is_stable_without_timings(self):
        # Arrange
        report = CheckReport("demo", {"k": 2}, seed=0).finish()

        # Act
        d = report.toDict()

        # Assert
        self.assertEqual(
            d,
            {
                "name": "demo",
                "params": {"k": 2},
                "verdict": "pass",
                "asserted": True,
                "cases": 0,
                "failures": [],
                "seed": 0,
            },
        )
        self.assertIn("millis", report.toDict(timings=True))

    def test_advisory_report(self):
        report = CheckReport("probe", asserted=False)
        report.finding(holds=False, exp=2**70)
        self.assertTrue(str(report).startswith("NOTE probe"))
        self.assertEqual(report.toDict()["findings"], [{"holds": False, "exp": str(2**70)}])
