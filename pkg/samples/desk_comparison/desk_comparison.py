import csv
import logging
import os
import sys

from gridsignal.cli import load_scenario
from gridsignal.project import Project
from gridsignal.train import ActuatedPolicy
from gridsignal.train import EvaluationSummary
from gridsignal.train import LearnedPolicy
from gridsignal.train import StaticPolicy
from gridsignal.train import ThresholdPolicy
from gridsignal.train import TrafficEnvironment
from gridsignal.train import Trainer
from gridsignal.train import evaluate

logger = logging.getLogger(__name__)


class DeskComparison:
    """Trains a policy on a small grid and ranks it against the baselines.

    Every controller is replayed on the same inflow episodes. The ranking
    is by mean halting vehicles, and a controller counts as better than
    another only if their mean +/- MAD intervals do not overlap.
    """

    def __init__(self, scenario='grid2x2', output_dir='desk_comparison'):
        """Initialize a new ``DeskComparison``.

        Arguments:
            scenario (str): A scenario file or bundled scenario name.
            output_dir (str): The directory for the checkpoint and the
                summary table.
        """
        self._scenario = load_scenario(Project.scenario_file(scenario))
        self._output_dir = output_dir

    def _train(self):
        scenario = self._scenario
        trainer = Trainer(
            scenario.build_network(), scenario.sim, scenario.reward,
            scenario.learn, scenario.approx, scenario.train, scenario.seed,
            scenario.comm.delayed_observation)
        trainer.train(
            checkpoint_filename=os.path.join(
                self._output_dir, 'checkpoint.gsq'))
        return LearnedPolicy(trainer.qs, 0.0)

    def run(self):
        """Train, evaluate every controller and write the summary table.

        Returns:
            list<EvaluationSummary>: The summaries, best first.
        """
        os.makedirs(self._output_dir, exist_ok=True)
        scenario = self._scenario
        net = scenario.build_network()
        env = TrafficEnvironment(
            net, scenario.sim, scenario.reward, scenario.train.policy_mode,
            scenario.comm.delayed_observation)
        policies = [
            StaticPolicy(scenario.static_schedule),
            ActuatedPolicy(scenario.actuated), ThresholdPolicy(),
            self._train()]
        summaries = []
        for policy in policies:
            logger.info('Evaluating %s', policy.NAME)
            summaries.append(evaluate(
                env, policy, scenario.train.eval_episodes,
                scenario.train.rollout_length, scenario.seed))
        summaries.sort(key=lambda summary: summary.metrics['halting'].mean)

        filename = os.path.join(self._output_dir, 'comparison.csv')
        with open(filename, 'w', newline='') as file:
            writer = csv.writer(file)
            writer.writerow(EvaluationSummary.HEADER)
            for summary in summaries:
                writer.writerows(summary.to_rows())

        for better, worse in zip(summaries, summaries[1:]):
            logger.info(
                '%s (%r) vs %s (%r): %s', better.controller,
                better.metrics['halting'], worse.controller,
                worse.metrics['halting'],
                'significant' if better.is_clearly_lower(worse)
                else 'overlapping')
        return summaries


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    DeskComparison(*sys.argv[1:]).run()
