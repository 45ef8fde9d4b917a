import unittest

import numpy as np

from gridsignal.approx import TabularQ
from gridsignal.errors import NumericFault
from gridsignal.learn import LearnConfig
from gridsignal.learn import PerSignalQ
from gridsignal.learn import PolicyGroup
from gridsignal.learn import Transition
from gridsignal.learn import q_update
from gridsignal.learn import td_targets


class QUpdateTest(unittest.TestCase):
    """Tests ``q_update`` and ``td_targets``."""

    def setUp(self):
        self._q = PerSignalQ(0, TabularQ(), PolicyGroup.SHARED)

    def test_example(self):
        """Test one update from an all-zero table."""
        cfg = LearnConfig(gamma=0.9, alpha=0.5)
        q_update(self._q, Transition(0, 's', 1, -4.0, 't', 0), cfg)
        self.assertEqual(0, self._q.q_values('s')[0])
        self.assertAlmostEqual(-0.2, self._q.q_values('s')[1])
        self.assertEqual([0, 1], self._q.approximator.visits('s', 0).tolist())

    def test_zero_alpha(self):
        """Test that an update with ``alpha = 0`` changes nothing."""
        table = self._q.approximator
        table.set_value('s', 0, 1, 0.7)
        table.set_value('t', 0, 0, -2.0)
        q_update(
            self._q, Transition(0, 's', 1, -4.0, 't', 0),
            LearnConfig(gamma=0.9, alpha=0))
        self.assertEqual([0, 0.7], self._q.q_values('s').tolist())

    def test_fixed_point(self):
        """Test that a value equal to its target is unchanged."""
        table = self._q.approximator
        table.set_value('t', 0, 0, -2.0)
        table.set_value('t', 0, 1, -1.0)
        for target_mode, bootstrap in (('sarsa', -2.0), ('qmax', -1.0)):
            cfg = LearnConfig(gamma=0.9, alpha=0.3, target_mode=target_mode)
            fixed_point = 0.1 * -4.0 + 0.9 * bootstrap
            table.set_value('s', 0, 1, fixed_point)
            q_update(self._q, Transition(0, 's', 1, -4.0, 't', 0), cfg)
            self.assertAlmostEqual(fixed_point, self._q.q_values('s')[1])

    def test_visit_rate(self):
        """Test the ``'visits'`` learning rate, which averages targets."""
        cfg = LearnConfig(gamma=0.5, alpha_mode='visits')
        for reward in (-2.0, -4.0, -6.0):
            q_update(
                self._q, Transition(0, 's', 0, reward, 't', 0, True), cfg)
        # The mean of the targets (1 - gamma) * R
        self.assertAlmostEqual(-2.0, self._q.q_values('s')[0])

    def test_td_targets(self):
        """Test ``td_targets``."""
        next_values = np.array([[1.0, 3.0], [2.0, -1.0]])
        rewards = np.array([-1.0, -2.0])
        qmax = LearnConfig(gamma=0.5)
        sarsa = LearnConfig(gamma=0.5, target_mode='sarsa')
        self.assertEqual(
            [1.0, 0.0],
            td_targets(
                rewards, next_values, [0, 1], [False, False], qmax).tolist())
        self.assertEqual(
            [0.0, -1.5],
            td_targets(
                rewards, next_values, [0, 1], [False, False],
                sarsa).tolist())
        self.assertEqual(
            [-0.5, 0.0],
            td_targets(
                rewards, next_values, [0, 1], [True, False], qmax).tolist())
        zero_gamma = LearnConfig(gamma=0)
        self.assertEqual(
            [-1.0, -2.0],
            td_targets(
                rewards, next_values, [0, 1], [False, False],
                zero_gamma).tolist())

    def test_non_finite(self):
        """Test that non-finite inputs raise a ``NumericFault``."""
        cfg = LearnConfig()
        with self.assertRaises(NumericFault):
            td_targets([float('nan')], [[0.0, 0.0]], [0], [False], cfg)
        with self.assertRaises(NumericFault):
            td_targets([0.0], [[float('inf'), 0.0]], [0], [False], cfg)
        with self.assertRaises(NumericFault):
            q_update(
                self._q, Transition(0, 's', 1, float('inf'), 't', 0), cfg)
