import os
import unittest

from gridsignal.approx import ApproxConfig
from gridsignal.learn import LearnConfig
from gridsignal.learn import RewardWeights
from gridsignal.network import RoadNetwork
from gridsignal.sim import MetricsRecord
from gridsignal.sim import SimConfig
from gridsignal.train import ActuatedPolicy
from gridsignal.train import EvaluationSummary
from gridsignal.train import LearnedPolicy
from gridsignal.train import MetricSummary
from gridsignal.train import StaticPolicy
from gridsignal.train import ThresholdPolicy
from gridsignal.train import TrainConfig
from gridsignal.train import TrafficEnvironment
from gridsignal.train import Trainer
from gridsignal.train import build_agents
from gridsignal.train import episode_means
from gridsignal.train import evaluate
from .test_policies import HoldPolicy

LONG_TESTS = bool(os.environ.get('GRIDSIGNAL_LONG_TESTS'))


class EvaluationTest(unittest.TestCase):
    """Tests ``evaluate`` and ``EvaluationSummary``."""

    def setUp(self):
        self._net = RoadNetwork.build_grid(2)
        self._env = TrafficEnvironment(
            self._net, SimConfig(), RewardWeights())

    def test_untrained_policy_holds(self):
        """Test that an all-zero Q-function evaluates like always holding.
        """
        for kind in ('tabular', 'neural'):
            config = ApproxConfig(kind=kind, hidden=(8,))
            qs, approximators = build_agents(
                self._net, SimConfig(), config, 'shared')
            if kind == 'neural':
                for param in approximators['shared'].network.parameters():
                    param.data.zero_()
            learned = evaluate(self._env, LearnedPolicy(qs), 2, 150, 4)
            hold = evaluate(self._env, HoldPolicy(), 2, 150, 4)
            self.assertEqual('learned', learned.controller)
            self.assertEqual(hold.episodes, learned.episodes)

    def test_repeatable(self):
        """Test that repeated evaluations give identical results."""
        first = evaluate(self._env, ActuatedPolicy(), 3, 120, 8)
        second = evaluate(self._env, ActuatedPolicy(), 3, 120, 8)
        self.assertEqual(first.episodes, second.episodes)
        self.assertEqual(first.to_rows(), second.to_rows())
        self.assertEqual(3, len(first.episodes['halting']))
        self.assertEqual(
            list(EvaluationSummary.METRICS),
            [row[1] for row in first.to_rows()])
        other = evaluate(self._env, ActuatedPolicy(), 3, 120, 9)
        self.assertNotEqual(first.episodes, other.episodes)

    def test_metric_summary(self):
        """Test ``MetricSummary``."""
        summary = MetricSummary([1.0, 2.0, 4.0, 10.0])
        self.assertEqual(4.25, summary.mean)
        self.assertAlmostEqual(3.49106001, summary.std)
        self.assertEqual(1.5, summary.mad)

    def test_episode_means(self):
        """Test that steps without vehicles are left out of the speed."""
        records = [
            MetricsRecord(1, 0, 0, 0.0, 0.0, None, 0.0, 0, 0),
            MetricsRecord(2, 2, 1, 4.0, 10.0, 3.0, 1.0, 2, 0),
            MetricsRecord(3, 2, 2, 2.0, 20.0, 5.0, 3.0, 2, 0)]
        means = episode_means(records)
        self.assertEqual(1, means['halting'])
        self.assertEqual(2, means['queue_time'])
        self.assertEqual(10, means['queue_length'])
        self.assertEqual(4, means['speed'])

    def test_is_clearly_lower(self):
        """Test ``EvaluationSummary.is_clearly_lower``."""
        episodes = {
            name: [1.0, 2.0, 3.0] for name in EvaluationSummary.METRICS}
        low = EvaluationSummary('low', episodes)
        high = EvaluationSummary(
            'high', dict(episodes, halting=[10.0, 12.0, 14.0]))
        self.assertTrue(low.is_clearly_lower(high))
        self.assertFalse(high.is_clearly_lower(low))
        self.assertFalse(low.is_clearly_lower(high, 'speed'))

    @unittest.skipUnless(LONG_TESTS, 'GRIDSIGNAL_LONG_TESTS is not set')
    def test_static_is_worst(self):
        """Test that the static plan halts the most vehicles on 5 x 5."""
        env = TrafficEnvironment(
            RoadNetwork.build_grid(5), SimConfig(), RewardWeights())
        static = evaluate(env, StaticPolicy(), 3, 1000, 0)
        actuated = evaluate(env, ActuatedPolicy(), 3, 1000, 0)
        threshold = evaluate(env, ThresholdPolicy(), 3, 1000, 0)
        self.assertGreater(
            static.metrics['halting'].mean, actuated.metrics['halting'].mean)
        self.assertGreater(
            static.metrics['halting'].mean,
            threshold.metrics['halting'].mean)

    @unittest.skipUnless(LONG_TESTS, 'GRIDSIGNAL_LONG_TESTS is not set')
    def test_learned_beats_rules(self):
        """Test that a trained policy halts fewer vehicles on 2 x 2.

        The learned policy must be clearly below the actuated control,
        which must be clearly below the static plan.
        """
        sim_config = SimConfig()
        train_config = TrainConfig(
            rollout_length=1000, rollouts_per_iteration=10, iterations=4,
            warmup_steps=10000, sync_every=4, batch_size=256)
        approx_config = ApproxConfig(
            kind='neural', learning_rate=2.5e-4, target_update=2000)
        trainer = Trainer(
            self._net, sim_config, RewardWeights(),
            LearnConfig(gamma=0.99, epsilon_fraction=0.1), approx_config,
            train_config)
        trainer.train()
        env = TrafficEnvironment(self._net, sim_config, RewardWeights())
        learned = evaluate(env, LearnedPolicy(trainer.qs, 0.0), 5, 1000, 0)
        actuated = evaluate(env, ActuatedPolicy(), 5, 1000, 0)
        static = evaluate(env, StaticPolicy(), 5, 1000, 0)
        self.assertTrue(learned.is_clearly_lower(actuated))
        self.assertTrue(actuated.is_clearly_lower(static))
