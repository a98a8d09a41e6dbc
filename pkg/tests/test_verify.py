"""Tests for the verification suites and their negative control."""

import unittest

from deutsch_paths import verify
from deutsch_paths.common.errors import InvalidSpecError

SMALL = verify.VerifyBounds(m_max=3, t_max=2, n_max=6, trunc=8, kernel_t_max=4)


class TestRunSuites(unittest.TestCase):
    def test_all_suites_pass(self):
        results = verify.run_suites(SMALL)
        self.assertEqual([r.name for r in results], list(verify.SUITES))
        for r in results:
            self.assertTrue(r.passed, (r.name, r.failures))
            self.assertGreater(r.cases, 0)

    def test_suite_filter(self):
        results = verify.run_suites(SMALL, names=["kernel"])
        self.assertEqual(len(results), 1)
        self.assertEqual(results[0].name, "kernel")
        self.assertEqual(results[0].cases, 5)

    def test_unknown_suite(self):
        with self.assertRaises(InvalidSpecError):
            verify.run_suites(SMALL, names=["nope"])

    def test_injected_fault_is_caught(self):
        results = verify.run_suites(SMALL, names=["oracle", "cramer"], phi=verify.faulty_phi_closed)
        self.assertFalse(any(r.passed for r in results))
        self.assertTrue(all(r.failures for r in results))

    def test_fault_does_not_touch_kernel_suite(self):
        results = verify.run_suites(SMALL, names=["kernel"], phi=verify.faulty_phi_closed)
        self.assertTrue(results[0].passed)


class TestBounds(unittest.TestCase):
    def test_bounds_must_be_positive(self):
        with self.assertRaises(InvalidSpecError):
            verify.VerifyBounds(m_max=0)

    def test_defaults(self):
        bounds = verify.VerifyBounds()
        self.assertEqual((bounds.m_max, bounds.t_max, bounds.n_max, bounds.trunc), (6, 5, 12, 16))


if __name__ == "__main__":
    unittest.main()
