import logging
import os
import time

import numpy as np

from ..approx import save_checkpoint
from ..errors import InvalidArgumentError
from ..errors import NumericFault
from ..learn import ReplayBuffer
from .agents import assign_policies
from .agents import build_agents
from .environment import TrafficEnvironment
from .inter_es import IdentityHook
from .iteration_report import IterationReport
from .policies import LearnedPolicy
from .rollout import run_rollout

logger = logging.getLogger(__name__)


def rollout_seed(seed, iteration, rollout):
    """Return the inflow seed of a training rollout."""
    return int(
        np.random.SeedSequence(
            [seed, 0, iteration, rollout]).generate_state(1)[0])


class Trainer:
    """Trains per-signal Q-functions on a grid network.

    Training runs ``iterations`` iterations of ``rollouts_per_iteration``
    rollouts. Every environment step adds one transition per agent to
    the replay buffer of the agent's policy group. Every ``sync_every``
    steps, each group whose buffer holds at least ``warmup_steps``
    transitions takes one update of its approximator on a batch of
    ``batch_size`` sampled transitions. Exploration decays linearly over
    the first ``epsilon_fraction`` of all steps.

    Public attributes:

    list<PerSignalQ> qs - The agents, indexed by intersection ID.
    dict<str, ValueApproximator> approximators - A map from the name of
        each policy group to its approximator.
    dict<str, ReplayBuffer> buffers - The replay buffer of each group.
    TrafficEnvironment env - The training environment.
    int steps - The number of environment steps so far.
    """

    def __init__(
            self, net, sim_config, weights, learn_config, approx_config,
            train_config, seed=0, delayed_observation=False, hook=None):
        if train_config.warmup_steps > approx_config.replay_capacity:
            raise InvalidArgumentError(
                'warmup_steps may not exceed replay_capacity',
                'warmup_steps')
        self._learn_config = learn_config
        self._train_config = train_config
        self._seed = seed
        self._hook = hook if hook is not None else IdentityHook()
        self.qs, self.approximators = build_agents(
            net, sim_config, approx_config, train_config.policy_mode)
        self.env = TrafficEnvironment(
            net, sim_config, weights, train_config.policy_mode,
            delayed_observation)
        self.buffers = {
            group: ReplayBuffer(approx_config.replay_capacity)
            for group in self.approximators}
        assignment = assign_policies(net, train_config.policy_mode)
        self._group_of = [
            assignment[c].value for c in range(net.num_intersections)]
        self.group_sizes = {
            group: self._group_of.count(group)
            for group in self.approximators}
        self._rng = np.random.default_rng(np.random.SeedSequence([seed, 1]))
        self._epsilon = learn_config.epsilon_schedule(
            train_config.total_steps)
        self.policy = LearnedPolicy(self.qs, self._epsilon.value(0))
        self.steps = 0
        self.losses = {group: None for group in self.approximators}

    def _on_step(self, transitions):
        for transition in transitions:
            self.buffers[self._group_of[transition.agent]].store(transition)
        self.steps += 1
        config = self._train_config
        if self.steps % config.sync_every == 0:
            for group, approximator in self.approximators.items():
                if len(self.buffers[group]) < config.warmup_steps:
                    continue
                batch = self.buffers[group].sample(
                    config.batch_size, self._rng)
                self.losses[group] = approximator.batch_update(
                    batch, self._learn_config)
        self.policy.epsilon = self._epsilon.value(self.steps)

    def run_iteration(self, iteration):
        """Run the rollouts of one iteration and return its report.

        Arguments:
            iteration (int): The iteration index, starting at 1.

        Returns:
            IterationReport: The report.
        """
        config = self._train_config
        start = time.monotonic()
        rewards = []
        group_totals = {group: 0.0 for group in self.approximators}
        for rollout in range(config.rollouts_per_iteration):
            result = run_rollout(
                self.env, rollout_seed(self._seed, iteration, rollout),
                self.policy, config.rollout_length, self._rng, self._on_step)
            rewards.append(result.reward)
            for c, reward in enumerate(result.signal_rewards):
                group_totals[self._group_of[c]] += reward
        count = config.rollouts_per_iteration
        group_rewards = {
            group: total / count / self.group_sizes[group]
            for group, total in group_totals.items()}
        return IterationReport(
            iteration, self.steps, max(rewards), sum(rewards) / count,
            min(rewards), group_rewards, dict(self.group_sizes),
            time.monotonic() - start)

    def save(self, filename):
        """Write a checkpoint of every group's approximator.

        We write to a temporary file first, so an interrupted write
        leaves the previous checkpoint intact.
        """
        temp_filename = '{:s}.tmp'.format(filename)
        save_checkpoint(self.approximators, temp_filename)
        os.replace(temp_filename, filename)

    def train(self, report_log=None, checkpoint_filename=None):
        """Run the whole training.

        Arguments:
            report_log (IterationReportLog): The log to append reports
                to, if any.
            checkpoint_filename (str): The checkpoint file, if any. We
                write it every ``eval_every`` iterations and at the end.

        Returns:
            list<IterationReport>: The report of every iteration.

        Raises:
            NumericFault: If an update produced a non-finite value. The
                last checkpoint written stays intact.
        """
        config = self._train_config
        reports = []
        logger.info(
            'Training %d iterations x %d rollouts x %d steps (%d steps)',
            config.iterations, config.rollouts_per_iteration,
            config.rollout_length, config.total_steps)
        for iteration in range(1, config.iterations + 1):
            try:
                report = self.run_iteration(iteration)
            except NumericFault:
                logger.error(
                    'Numeric fault in iteration %d after %d steps',
                    iteration, self.steps)
                raise
            reports.append(report)
            logger.info(
                'Iteration %d: steps %d, reward %.2f (min %.2f, max %.2f), '
                'per agent %s, %.1f s',
                report.iteration, report.steps, report.reward_mean,
                report.reward_min, report.reward_max,
                ', '.join(
                    '{:s} {:.3f}'.format(group, reward)
                    for group, reward in report.group_rewards.items()),
                report.seconds)
            if report_log is not None:
                report_log.write(report)
            for group, multiplier in self._hook.multipliers(
                    reports).items():
                if multiplier != 1:
                    self.approximators[group].scale_learning_rate(multiplier)
            if checkpoint_filename is not None and (
                    iteration % config.eval_every == 0 or
                    iteration == config.iterations):
                self.save(checkpoint_filename)
        return reports
