import json
import unittest
from collections import Counter
from fractions import Fraction
from random import Random

from hecke_afl.afl import (
    VerificationReport,
    afl_check,
    commutativity_report,
    coprimality_check,
    fl_check,
    injectivity_check,
    jsonable,
    kernel_check,
)
from hecke_afl.exceptions import InvalidInputError
from hecke_afl.localfield import PrimeConfig
from hecke_afl.orbital import sample_orbit


class TestReport(unittest.TestCase):
    def test_jsonable(self):
        self.assertEqual(jsonable(Fraction(1, 2)), "1/2")
        self.assertEqual(jsonable(3), "3/1")
        self.assertIs(jsonable(True), True)
        self.assertEqual(jsonable({"x": [Fraction(-2, 4), "s"]}), {"x": ["-1/2", "s"]})

    def test_report_summary(self):
        report = VerificationReport("FL", {"p": 3})
        report.add({"m": 0}, Fraction(1), Fraction(1))
        report.add({"m": 1}, Fraction(1), Fraction(0))
        report.skip({"m": 2}, "precision")
        self.assertFalse(report.passed)
        self.assertEqual(report.summary, {"total": 3, "passed": 1, "failed": 1, "skipped": 1})
        record = report.as_dict()
        self.assertEqual(record["schema"], 1)
        self.assertEqual(record["cases"][1]["lhs"], "1/1")
        self.assertFalse(record["cases"][1]["pass"])
        self.assertTrue(record["cases"][2]["skipped"])
        json.dumps(record)


class TestFundamentalLemma(unittest.TestCase):
    def test_fl_check(self):
        report = fl_check(PrimeConfig(p=3), odd_samples=100, even_samples=50, m_max=3, seed=0)
        self.assertTrue(report.passed, [case.as_dict() for case in report.failed])
        by_note = Counter(case.note for case in report.cases if not case.skipped)
        skipped = report.summary["skipped"]
        self.assertEqual(by_note["nonsplit"], 100 * 4)
        self.assertEqual(by_note["split"] + 4 * skipped, 50 * 4)
        odd_r = {case.inputs["r"] for case in report.cases if case.note == "nonsplit"}
        self.assertEqual(odd_r, {1, 3, 5, 7})
        even_r = {case.inputs["r"] for case in report.cases if case.note == "split"}
        self.assertTrue(all(r % 2 == 0 for r in even_r))
        self.assertIn(-6, even_r)

    def test_fl_check_p5(self):
        report = fl_check(PrimeConfig(p=5), odd_samples=6, even_samples=6, m_max=2, seed=1)
        self.assertTrue(report.passed)

    def test_fl_check_one_branch(self):
        report = fl_check(PrimeConfig(p=3), odd_samples=3, even_samples=0, m_max=1)
        self.assertEqual({case.note for case in report.cases}, {"nonsplit"})
        self.assertEqual(len(report.cases), 3 * 2)

    def test_fl_rejects_negative_samples(self):
        with self.assertRaises(InvalidInputError):
            fl_check(odd_samples=-1)


class TestArithmeticFundamentalLemma(unittest.TestCase):
    def test_afl_check(self):
        report = afl_check((1, 3, 5, 7), m_max=5, config=PrimeConfig(p=3))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.cases), 4 * 6)
        first = report.as_dict()["cases"][0]
        self.assertEqual(first["inputs"]["r"], 1)
        self.assertEqual(first["lhs"], "1/1")

    def test_afl_check_other_primes(self):
        for p in (5, 7):
            self.assertTrue(afl_check((1, 3), m_max=3, config=PrimeConfig(p=p), seed=4).passed)

    def test_afl_rejects_even_r(self):
        with self.assertRaises(InvalidInputError):
            afl_check((2,), m_max=1)

    def test_afl_is_deterministic(self):
        first = afl_check((1, 3), m_max=2, seed=9).as_dict()
        second = afl_check((1, 3), m_max=2, seed=9).as_dict()
        self.assertEqual(json.dumps(first, sort_keys=True), json.dumps(second, sort_keys=True))


class TestKernel(unittest.TestCase):
    def test_kernel_check(self):
        report = kernel_check(4, PrimeConfig(p=3))
        self.assertTrue(report.passed)
        kernel_cases = [case for case in report.cases if case.note == "kernel"]
        self.assertEqual(len(kernel_cases), 3 * 4)

    def test_kernel_needs_three(self):
        with self.assertRaises(InvalidInputError):
            kernel_check(2)

    def test_kernel_uses_every_attainable_odd_r(self):
        report = kernel_check(4, PrimeConfig(p=3))
        self.assertEqual(report.parameters["r_values"], [1, 3, 5, 7])
        with self.assertRaises(InvalidInputError):
            sample_orbit(PrimeConfig(p=3), Random(0), -3)


class TestInjectivity(unittest.TestCase):
    def test_profiles_are_distinct(self):
        report = injectivity_check(m_max=6, r_bound=12, config=PrimeConfig(p=3))
        self.assertTrue(report.passed, [case.as_dict() for case in report.failed])
        self.assertEqual(len(report.cases), 7 * 6 // 2)
        r_values = report.parameters["r_values"]
        self.assertEqual(r_values[0], -12)
        self.assertNotIn(-11, r_values)
        self.assertEqual(len(r_values), 6 + 13)

    def test_single_orbit(self):
        # at r = 0 orb(phi'_m) = (-1)^m (Z^-m + Z^m), already enough to separate
        report = injectivity_check(m_max=3, r_bound=0, config=PrimeConfig(p=3))
        self.assertEqual(report.parameters["r_values"], [0])
        self.assertTrue(report.passed)

    def test_rejects_bad_arguments(self):
        with self.assertRaises(InvalidInputError):
            injectivity_check(m_max=0)
        with self.assertRaises(InvalidInputError):
            injectivity_check(r_bound=-1)


class TestCoprimality(unittest.TestCase):
    def test_coprime(self):
        report = coprimality_check((3, 5, 7))
        self.assertTrue(report.passed)
        self.assertEqual([case.lhs for case in report.cases], ["1", "1", "1"])

    def test_rejects_bad_q(self):
        with self.assertRaises(InvalidInputError):
            coprimality_check((9,))
        with self.assertRaises(InvalidInputError):
            coprimality_check(())


class TestCommutativity(unittest.TestCase):
    def test_rank_two(self):
        report = commutativity_report(2, 2, 0, PrimeConfig(p=3), workers=1)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases[0].extra["left_set_size"], 13)


if __name__ == "__main__":
    unittest.main()
