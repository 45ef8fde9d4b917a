import logging
import sys

from gridsignal.cli import load_scenario
from gridsignal.project import Project
from gridsignal.train import TrainConfig
from gridsignal.train import Trainer

logger = logging.getLogger(__name__)


class ScalingBenchmark:
    """Measures how the duration of a training rollout grows with the grid.

    We time one iteration of a single short rollout per scenario. The
    warmup outlasts the rollout, so no gradient updates happen and the
    timing covers the simulation and the factored action selection.
    """

    # The bundled scenarios, from the smallest grid to the largest
    SCENARIOS = ('grid2x2', 'grid5x5', 'grid10x10', 'grid15x15')

    def __init__(self, scenarios=None, rollout_length=200):
        self._scenarios = (
            scenarios if scenarios else ScalingBenchmark.SCENARIOS)
        self._rollout_length = rollout_length

    def run(self):
        """Return a list of (signals, seconds per step) pairs."""
        results = []
        for name in self._scenarios:
            scenario = load_scenario(Project.scenario_file(name))
            net = scenario.build_network()
            # Time the rollout alone: no buffer fills up to the warmup
            transitions = net.num_intersections * self._rollout_length
            train_config = TrainConfig(
                rollout_length=self._rollout_length,
                rollouts_per_iteration=1, iterations=1,
                policy_mode=scenario.train.policy_mode,
                warmup_steps=min(
                    transitions + 1, scenario.approx.replay_capacity))
            trainer = Trainer(
                net, scenario.sim, scenario.reward, scenario.learn,
                scenario.approx, train_config, scenario.seed)
            report = trainer.run_iteration(1)
            per_step = report.seconds / self._rollout_length
            logger.info(
                '%s: %d signals, %.2f ms per step', name,
                net.num_intersections, 1000 * per_step)
            results.append((net.num_intersections, per_step))
        return results


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    ScalingBenchmark(sys.argv[1:] or None).run()
