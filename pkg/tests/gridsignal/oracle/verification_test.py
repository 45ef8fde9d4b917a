import os
import unittest

import numpy as np

from gridsignal.oracle import CheckResult
from gridsignal.oracle import VerificationReport
from gridsignal.oracle import check_decomposition
from gridsignal.oracle import check_factored_argmax
from gridsignal.oracle import check_reward_partition
from gridsignal.oracle import check_signal_machine
from gridsignal.oracle import run_verification

LONG_TESTS = bool(os.environ.get('GRIDSIGNAL_LONG_TESTS'))


class VerificationTest(unittest.TestCase):
    """Tests the verification checks."""

    def test_checks(self):
        """Test the fast checks at small scale."""
        rng = np.random.default_rng(0)
        self.assertLessEqual(
            check_decomposition(rng, instances=20, max_states=10), 1e-9)
        self.assertEqual(0, check_factored_argmax(rng, tables=50))
        self.assertLessEqual(
            check_reward_partition(rng, observations=100), 1e-12)
        self.assertEqual((0, 52), check_signal_machine())

    def test_reward_partition(self):
        """Test that the reward partition gap is absolute and tiny."""
        rng = np.random.default_rng(5)
        gap = check_reward_partition(rng, observations=200)
        self.assertGreaterEqual(gap, 0)
        self.assertLessEqual(gap, 1e-12)

    def test_report(self):
        """Test ``VerificationReport``."""
        checks = [
            CheckResult('first', 1e-12, 1e-9, True, 'small'),
            CheckResult('second', 3, 0, False, 'broken')]
        report = VerificationReport(checks, [(2, 2, 8)])
        self.assertFalse(report.passed)
        self.assertEqual(['second'], [c.name for c in report.failures()])
        lines = report.format_table().split('\n')
        self.assertEqual(['check', 'value', 'tolerance', 'result'],
                         lines[0].split())
        self.assertIn('ok', lines[1].split())
        self.assertIn('FAILED', lines[2].split())
        self.assertEqual(['2', '2', '8'], lines[-1].split())
        self.assertTrue(VerificationReport(checks[:1], []).passed)
        self.assertEqual(
            [('first', 1e-12, 1e-9, 1, 'small'),
             ('second', 3, 0, 0, 'broken')],
            report.to_rows())
        self.assertEqual([(2, 2, 8)], report.cost_rows())
        self.assertEqual(
            len(VerificationReport.HEADER), len(report.to_rows()[0]))

    @unittest.skipUnless(LONG_TESTS, 'GRIDSIGNAL_LONG_TESTS is not set')
    def test_run_verification(self):
        """Test that the whole suite passes."""
        report = run_verification(0)
        self.assertTrue(report.passed, report.format_table())
        self.assertEqual(
            ['decomposition', 'decomposition_control', 'convergence',
             'factored_argmax', 'reward_partition', 'signal_machine',
             'selection_cost'],
            [check.name for check in report.checks])
        self.assertEqual(9, len(report.costs))
