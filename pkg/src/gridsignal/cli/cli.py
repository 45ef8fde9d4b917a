from argparse import ArgumentParser
import contextlib
import csv
import logging
import os
import sys

import numpy as np

from ..approx import load_checkpoint
from ..comms import estimate_active_vehicles
from ..comms import read_vehicle_counts
from ..comms import sample_delays
from ..comms import traffic_volume
from ..errors import CheckpointError
from ..errors import ConfigError
from ..errors import GridSignalError
from ..errors import NumericFault
from ..errors import SimulationFault
from ..errors import VerificationError
from ..oracle import VerificationReport
from ..oracle import run_verification
from ..project import Project
from ..render import SnapshotRenderer
from ..sim import MetricsLog
from ..sim import SignalLog
from ..sim import TrajectoryLog
from ..train import ActuatedPolicy
from ..train import EvaluationSummary
from ..train import IterationReportLog
from ..train import LearnedPolicy
from ..train import StaticPolicy
from ..train import ThresholdPolicy
from ..train import TrafficEnvironment
from ..train import Trainer
from ..train import build_agents
from ..train import evaluate
from ..train import run_rollout
from .run_manifest import RunManifest
from .scenario import Scenario
from .scenario import load_scenario

logger = logging.getLogger(__name__)


class Cli:
    """Implements the ``gridsignal`` command-line interface."""

    # The exit code of each kind of failure
    EXIT_OK = 0
    EXIT_ERROR = 1
    EXIT_USAGE = 2
    EXIT_CONFIG = 3
    EXIT_CHECKPOINT = 4
    EXIT_NUMERIC = 5
    EXIT_VERIFICATION = 6
    EXIT_SIMULATION = 7

    # The environment variable that overrides the output directory
    OUTPUT_DIR_VAR = 'GRIDSIGNAL_OUTPUT_DIR'

    @staticmethod
    def main(cli_args):
        """Execute a command-line operation and return its exit code.

        Arguments:
            cli_args (list<str>): The arguments, excluding the program.

        Returns:
            int: The exit code.
        """
        try:
            parsed_args = Cli._parse_args(cli_args)
        except SystemExit as exception:
            return exception.code if exception.code is not None else 0
        if parsed_args is None:
            return Cli.EXIT_USAGE
        logging.basicConfig(
            level=getattr(logging, parsed_args.log_level),
            format='%(asctime)s %(levelname)s %(name)s: %(message)s')
        try:
            Cli._run(parsed_args)
        except ConfigError as exception:
            logger.error('Invalid scenario: %s', exception)
            return Cli.EXIT_CONFIG
        except CheckpointError as exception:
            logger.error('Checkpoint error: %s', exception)
            return Cli.EXIT_CHECKPOINT
        except NumericFault as exception:
            logger.error('Numeric fault: %s', exception)
            return Cli.EXIT_NUMERIC
        except VerificationError as exception:
            logger.error('Verification failed: %s', exception)
            return Cli.EXIT_VERIFICATION
        except SimulationFault as exception:
            logger.error('Simulation fault: %s', exception)
            return Cli.EXIT_SIMULATION
        except GridSignalError as exception:
            logger.error('%s', exception)
            return Cli.EXIT_ERROR
        return Cli.EXIT_OK

    @staticmethod
    def _run(parsed_args):
        if parsed_args.command == 'verify':
            Cli._verify(parsed_args)
            return
        scenario = load_scenario(Project.scenario_file(parsed_args.scenario))
        if parsed_args.seed is not None:
            scenario.seed = parsed_args.seed
        if os.environ.get(Cli.OUTPUT_DIR_VAR):
            scenario.output_dir = os.environ[Cli.OUTPUT_DIR_VAR]
        if parsed_args.command == 'train':
            Cli._train(scenario)
        elif parsed_args.command == 'eval':
            Cli._evaluate(scenario, parsed_args, 'learned', 'eval')
        elif parsed_args.command == 'baseline':
            controller = parsed_args.controller or scenario.controller
            if controller == 'learned':
                raise ConfigError(
                    'controller: use the eval command for learned policies')
            Cli._evaluate(
                scenario, parsed_args, controller,
                'baseline-{:s}'.format(controller))
        elif parsed_args.command == 'comm':
            Cli._comm(scenario, parsed_args)
        else:
            Cli._export_network(scenario)

    @staticmethod
    def _output_dir(scenario, name):
        """Return (and create) the output directory of a command."""
        directory = os.path.join(scenario.output_dir, name)
        os.makedirs(directory, exist_ok=True)
        return directory

    @staticmethod
    def _environment(scenario, net):
        return TrafficEnvironment(
            net, scenario.sim, scenario.reward, scenario.train.policy_mode,
            scenario.comm.delayed_observation)

    @staticmethod
    def _train(scenario):
        directory = Cli._output_dir(scenario, 'train')
        manifest = RunManifest('train', scenario, scenario.seed)
        trainer = Trainer(
            scenario.build_network(), scenario.sim, scenario.reward,
            scenario.learn, scenario.approx, scenario.train, scenario.seed,
            scenario.comm.delayed_observation)
        report_filename = os.path.join(directory, 'iterations.csv')
        checkpoint_filename = os.path.join(directory, 'checkpoint.gsq')
        with IterationReportLog(
                report_filename, list(trainer.approximators)) as report_log:
            reports = trainer.train(report_log, checkpoint_filename)
        manifest.add_output(report_filename)
        manifest.add_output(checkpoint_filename)
        manifest.extra['steps'] = reports[-1].steps
        manifest.write(os.path.join(directory, 'manifest.json'))
        print('Trained {:d} steps; final mean rollout reward {:.2f}'.format(
            reports[-1].steps, reports[-1].reward_mean))

    @staticmethod
    def _policy(scenario, net, controller, checkpoint):
        if controller == 'static':
            return StaticPolicy(scenario.static_schedule)
        elif controller == 'actuated':
            return ActuatedPolicy(scenario.actuated)
        elif controller == 'threshold':
            return ThresholdPolicy(
                scenario.actuated
                if scenario.actuated.queue_threshold is not None else None)
        qs, approximators = build_agents(
            net, scenario.sim, scenario.approx, scenario.train.policy_mode)
        load_checkpoint(approximators, checkpoint)
        return LearnedPolicy(qs, 0.0)

    @staticmethod
    def _evaluate(scenario, parsed_args, controller, name):
        directory = Cli._output_dir(scenario, name)
        manifest = RunManifest(name, scenario, scenario.seed)
        net = scenario.build_network()
        checkpoint = getattr(parsed_args, 'checkpoint', None)
        policy = Cli._policy(scenario, net, controller, checkpoint)
        env = Cli._environment(scenario, net)
        episodes = parsed_args.episodes or scenario.train.eval_episodes
        length = scenario.train.rollout_length
        summary = evaluate(env, policy, episodes, length, scenario.seed)

        summary_filename = os.path.join(directory, 'eval_summary.csv')
        with open(summary_filename, 'w', newline='') as file:
            writer = csv.writer(file)
            writer.writerow(EvaluationSummary.HEADER)
            writer.writerows(summary.to_rows())
        manifest.add_output(summary_filename)

        # Replay the first episode once more for its per-step metrics
        metrics_filename = os.path.join(directory, 'metrics.csv')
        seed = int(np.random.SeedSequence(
            [scenario.seed, 2, 0]).generate_state(1)[0])
        with contextlib.ExitStack() as stack:
            on_step = None
            if parsed_args.trace:
                trajectory_filename = os.path.join(
                    directory, 'trajectory.csv')
                signals_filename = os.path.join(directory, 'signals.csv')
                trajectory_log = stack.enter_context(
                    TrajectoryLog(trajectory_filename))
                signal_log = stack.enter_context(
                    SignalLog(signals_filename))

                def on_step(transitions):
                    trajectory_log.write(env.world)
                    signal_log.write(env.world.step, env.signals)

                manifest.add_output(trajectory_filename)
                manifest.add_output(signals_filename)
            result = run_rollout(
                env, seed, policy, length, np.random.default_rng(seed),
                on_step)
        with MetricsLog(metrics_filename) as metrics_log:
            for record in result.metrics:
                metrics_log.write(record)
        manifest.add_output(metrics_filename)

        if parsed_args.snapshot:
            SnapshotRenderer(net).save(
                env.world, env.signals, parsed_args.snapshot)
            manifest.add_output(parsed_args.snapshot)
        manifest.write(os.path.join(directory, 'manifest.json'))

        print('{:<14s}{:>10s}{:>10s}{:>10s}'.format(
            'metric', 'mean', 'std', 'mad'))
        for _, metric, mean, std, mad in summary.to_rows():
            print('{:<14s}{:>10.3f}{:>10.3f}{:>10.3f}'.format(
                metric, mean, std, mad))

    @staticmethod
    def _verify(parsed_args):
        seed = parsed_args.seed or 0
        directory = os.path.join(
            os.environ.get(Cli.OUTPUT_DIR_VAR) or Scenario().output_dir,
            'verify')
        os.makedirs(directory, exist_ok=True)
        manifest = RunManifest('verify', seed=seed)
        report = run_verification(seed, parsed_args.long)
        print(report.format_table())

        checks_filename = os.path.join(directory, 'verify.csv')
        with open(checks_filename, 'w', newline='') as file:
            writer = csv.writer(file)
            writer.writerow(VerificationReport.HEADER)
            writer.writerows(report.to_rows())
        manifest.add_output(checks_filename)
        costs_filename = os.path.join(directory, 'selection_cost.csv')
        with open(costs_filename, 'w', newline='') as file:
            writer = csv.writer(file)
            writer.writerow(VerificationReport.COST_HEADER)
            writer.writerows(report.cost_rows())
        manifest.add_output(costs_filename)
        manifest.extra['long'] = parsed_args.long
        manifest.extra['passed'] = report.passed
        manifest.write(os.path.join(directory, 'manifest.json'))

        if not report.passed:
            raise VerificationError(
                'Failed checks: {:s}'.format(
                    ', '.join(check.name for check in report.failures())))

    @staticmethod
    def _comm(scenario, parsed_args):
        directory = Cli._output_dir(scenario, 'comm')
        manifest = RunManifest('comm', scenario, scenario.seed)
        vehicles = parsed_args.vehicles
        if vehicles is None and parsed_args.log is not None:
            vehicles = estimate_active_vehicles(
                read_vehicle_counts(parsed_args.log))
            print('Estimated active vehicles: {:.1f}'.format(vehicles))
        elif vehicles is None:
            net = scenario.build_network()
            env = Cli._environment(scenario, net)
            seed = scenario.seed
            result = run_rollout(
                env, seed, ActuatedPolicy(scenario.actuated),
                scenario.train.rollout_length, np.random.default_rng(seed))
            vehicles = estimate_active_vehicles(result.metrics)
            print('Estimated active vehicles: {:.1f}'.format(vehicles))
        manifest.extra['vehicles'] = vehicles
        rng = np.random.default_rng(scenario.seed)
        report = sample_delays(
            scenario.comm, max(1, int(round(vehicles))), parsed_args.steps,
            rng)
        print(report.format_table())
        print('Uplink load: {:.0f} B/s'.format(
            traffic_volume(scenario.comm, vehicles)))
        filename = os.path.join(directory, 'comm.csv')
        with open(filename, 'w', newline='') as file:
            writer = csv.writer(file)
            writer.writerow(report.HEADER)
            writer.writerows(report.to_rows())
        manifest.add_output(filename)
        manifest.write(os.path.join(directory, 'manifest.json'))

    @staticmethod
    def _export_network(scenario):
        directory = Cli._output_dir(scenario, 'network')
        filename = os.path.join(directory, 'network.json')
        scenario.build_network().export_json(filename)
        print(filename)

    @staticmethod
    def _parse_args(cli_args):
        """Return the results of parsing the specified command-line arguments.

        Arguments:
            cli_args (list<str>): The arguments, excluding the program.

        Returns:
            Namespace: The results, or ``None`` if no command was given.
        """
        common = ArgumentParser(add_help=False)
        common.add_argument(
            '--seed', type=int, default=None,
            help='override the seed of the scenario')
        common.add_argument(
            '--log-level', default='INFO',
            choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
            help='the logging level (default: INFO)')

        parser = ArgumentParser(
            description='Traffic signal control with decentralized '
            'per-signal Q-learning on grid networks.',
            prog='gridsignal')
        subparsers = parser.add_subparsers(dest='command')

        train_parser = subparsers.add_parser(
            'train', parents=[common],
            description='Train per-signal Q-functions.')
        train_parser.add_argument(
            'scenario', help='a scenario file or bundled scenario name')

        eval_parser = subparsers.add_parser(
            'eval', parents=[common],
            description='Replay a trained policy greedily.')
        eval_parser.add_argument(
            'scenario', help='a scenario file or bundled scenario name')
        eval_parser.add_argument(
            '--checkpoint', required=True, help='the checkpoint file')

        baseline_parser = subparsers.add_parser(
            'baseline', parents=[common],
            description='Evaluate a rule-based controller.')
        baseline_parser.add_argument(
            'scenario', help='a scenario file or bundled scenario name')
        baseline_parser.add_argument(
            '--controller', choices=('static', 'actuated', 'threshold'),
            help='the controller (default: the scenario\'s controller)')

        for evaluation_parser in (eval_parser, baseline_parser):
            evaluation_parser.add_argument(
                '--episodes', type=int, default=None,
                help='the number of episodes (default: train.eval_episodes)')
            evaluation_parser.add_argument(
                '--snapshot', metavar='PATH', default=None,
                help='write a PNG image of the final step')
            evaluation_parser.add_argument(
                '--trace', action='store_true',
                help='write the vehicle trajectories and signal phases of '
                'the replayed episode')

        verify_parser = subparsers.add_parser(
            'verify', parents=[common],
            description='Run the exact checks of the learning theory.')
        verify_parser.add_argument(
            '--long', action='store_true',
            help='run the checks at full scale')

        comm_parser = subparsers.add_parser(
            'comm', parents=[common],
            description='Sample vehicle-to-edge message delays.')
        comm_parser.add_argument(
            'scenario', help='a scenario file or bundled scenario name')
        comm_parser.add_argument(
            '--vehicles', type=float, default=None,
            help='the number of active vehicles (default: estimated by '
            'simulating the scenario)')
        comm_parser.add_argument(
            '--log', metavar='PATH', default=None,
            help='estimate the number of active vehicles from a metrics or '
            'trajectory CSV file instead of simulating')
        comm_parser.add_argument(
            '--steps', type=int, default=1000,
            help='the number of steps to sample (default: 1000)')

        network_parser = subparsers.add_parser(
            'export-network', parents=[common],
            description='Write the grid topology as JSON.')
        network_parser.add_argument(
            'scenario', help='a scenario file or bundled scenario name')

        parsed_args = parser.parse_args(cli_args)
        if parsed_args.command is None:
            print(parser.format_usage(), end='', file=sys.stderr)
            print(
                'gridsignal: error: the following arguments are required: '
                'command',
                file=sys.stderr)
            return None
        return parsed_args


def gridsignal_cli():
    """Execute a command-line operation using the arguments ``sys.argv[1:]``.
    """
    sys.exit(Cli.main(sys.argv[1:]))


if __name__ == '__main__':
    gridsignal_cli()
