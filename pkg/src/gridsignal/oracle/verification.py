import logging
import math

import numpy as np

from ..learn import GlobalObservation
from ..learn import LearnConfig
from ..learn import RewardWeights
from ..learn import greedy_actions
from ..learn import reward_shared
from ..learn import rewards_per_signal
from ..network import RoadNetwork
from ..signal import Phase
from ..signal import SignalState
from .decentralized import brute_force_joint_action
from .decentralized import greedy_joint_policy
from .decentralized import learn_decentralized
from .decentralized import linear_fit
from .decentralized import policy_gap
from .decentralized import selection_costs
from .finite_mdp import factored_mdp
from .finite_mdp import random_mdp
from .solvers import decomposition_check

logger = logging.getLogger(__name__)


class CheckResult:
    """The outcome of one verification check.

    Public attributes:

    str name - The name of the check.
    float value - The measured quantity, e.g. the largest residual.
    float tolerance - The bound ``value`` is compared against.
    bool passed - Whether the check passed.
    str detail - A human-readable description of what was measured.
    """

    def __init__(self, name, value, tolerance, passed, detail):
        self.name = name
        self.value = value
        self.tolerance = tolerance
        self.passed = passed
        self.detail = detail


class VerificationReport:
    """The results of ``run_verification``.

    Public attributes:

    list<CheckResult> checks - The checks, in the order they ran.
    list<tuple<int, int, int>> costs - For each number of agents ``C``,
        the approximator queries of the factored argmax and those of
        enumerating every joint action.
    """

    # The header of the rows ``to_rows`` returns
    HEADER = ('check', 'value', 'tolerance', 'passed', 'detail')

    # The header of the rows ``cost_rows`` returns
    COST_HEADER = ('agents', 'factored_queries', 'enumerated_queries')

    def __init__(self, checks, costs):
        self.checks = checks
        self.costs = costs

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_rows(self):
        return [
            (check.name, check.value, check.tolerance, int(check.passed),
             check.detail)
            for check in self.checks]

    def cost_rows(self):
        return [tuple(row) for row in self.costs]

    def format_table(self):
        """Return the results as aligned text."""
        lines = ['{:<28s}{:>14s}{:>12s}  {:s}'.format(
            'check', 'value', 'tolerance', 'result')]
        for check in self.checks:
            lines.append('{:<28s}{:>14.3e}{:>12.1e}  {:s}  {:s}'.format(
                check.name, check.value, check.tolerance,
                'ok' if check.passed else 'FAILED', check.detail))
        lines.append('')
        lines.append('{:>4s}{:>12s}{:>14s}'.format(
            'C', 'factored', 'enumerated'))
        for num_agents, factored, enumerated in self.costs:
            lines.append('{:>4d}{:>12d}{:>14d}'.format(
                num_agents, factored, enumerated))
        return '\n'.join(lines)


def check_decomposition(rng, instances=100, max_states=50, max_agents=4):
    """Return the largest decomposition residual over random MDPs.

    Every MDP has additive rewards and a random deterministic policy.
    """
    worst = 0.0
    for _ in range(instances):
        num_states = int(rng.integers(1, max_states + 1))
        num_agents = int(rng.integers(1, max_agents + 1))
        gamma = float(rng.uniform(0, 0.99))
        mdp = random_mdp(num_states, num_agents, gamma, rng)
        policy = rng.integers(0, mdp.num_actions, size=num_states)
        worst = max(worst, decomposition_check(mdp, policy))
    return worst


def check_convergence(seed, samples, gamma=0.5, epsilon=0.2, factored=True):
    """Return the relative policy gap of decentralized Q-learning.

    By default we learn on a two-agent factored MDP with 4 x 5 = 20
    states, with a learning rate of one over the visit count. An agent's
    ``Q_c(s, a_c)`` averages its reward over the other agent's actions,
    so only MDPs whose agent rewards and transitions depend on the
    agent's own action can be learned exactly. With ``factored=False``
    we learn on a dense random 20-state MDP instead, where the rewards
    depend on the joint action and the gap stays large.
    """
    rng = np.random.default_rng(seed)
    if factored:
        mdp = factored_mdp([4, 5], gamma, rng)
    else:
        mdp = random_mdp(20, 2, gamma, rng)
    config = LearnConfig(gamma=gamma, alpha_mode='visits', target_mode='qmax')
    qs = learn_decentralized(mdp, samples, epsilon, config, rng)
    return policy_gap(mdp, greedy_joint_policy(qs, mdp.num_states))


def check_factored_argmax(rng, max_agents=10, tables=1000):
    """Return the number of random tables where the argmaxes disagree."""
    mismatches = 0
    for num_agents in range(2, max_agents + 1):
        for _ in range(tables):
            values = rng.normal(size=(num_agents, 2))
            joint, _ = brute_force_joint_action(values)
            if not np.array_equal(joint, greedy_actions(values)):
                mismatches += 1
    return mismatches


def check_reward_partition(rng, observations=10000, n=3):
    """Return the largest absolute gap between the two reward forms.

    The observations are random: halting counts up to 20 and speed lags
    up to 60 m/s on every lane, and random phases.
    """
    net = RoadNetwork.build_grid(n)
    weights = RewardWeights()
    worst = 0.0
    for step in range(observations):
        obs = GlobalObservation(
            step, rng.integers(0, 21, size=net.num_lanes),
            rng.uniform(0, 60, size=net.num_lanes),
            rng.integers(0, 4, size=net.num_intersections))
        shared = reward_shared(obs, weights, net)
        total = math.fsum(rewards_per_signal(obs, net, weights))
        worst = max(worst, abs(total - shared))
    return worst


def check_signal_machine(max_elapsed=10):
    """Enumerate the signal phase machine and count broken transitions.

    We visit every phase with every whole elapsed time up to
    ``max_elapsed`` seconds and apply both actions with a step of 1 s.
    A transition is broken if yellow does not last exactly 2 s, a green
    phase ends before 3 s or without a switch request, a switch request
    during yellow has an effect, or the phase skips ahead in the cycle.

    Returns:
        tuple<int, int>: The number of broken and of checked transitions.
    """
    broken = 0
    checked = 0
    for phase in Phase:
        limit = 1 if phase.is_yellow else max_elapsed
        for elapsed in range(limit + 1):
            for action in (SignalState.HOLD, SignalState.SWITCH):
                state = SignalState(
                    0, phase, float(elapsed),
                    phase.next() if phase.is_yellow else None)
                result = state.advance(action)
                checked += 1
                if phase.is_yellow:
                    if elapsed + 1 >= SignalState.YELLOW_TIME:
                        expected = (phase.next(), 0.0)
                    else:
                        expected = (phase, elapsed + 1.0)
                elif (action == SignalState.SWITCH and
                        elapsed >= SignalState.MIN_GREEN_TIME):
                    expected = (phase.next(), 0.0)
                else:
                    expected = (phase, elapsed + 1.0)
                if (result.phase, result.elapsed) != expected:
                    broken += 1
    return broken, checked


def run_verification(seed=0, long=False):
    """Run the verification suite.

    Arguments:
        seed (int): The seed of all random instances.
        long (bool): Whether to run the checks at full scale: 10
            convergence seeds with 10^6 samples each and 1000 tables per
            agent count, instead of 2 seeds with 2 x 10^5 samples and 200
            tables.

    Returns:
        VerificationReport: The results.
    """
    rng = np.random.default_rng(seed)
    checks = []

    residual = check_decomposition(rng)
    checks.append(CheckResult(
        'decomposition', residual, 1e-9, residual <= 1e-9,
        'max |Q - sum Q_c| over 100 random MDPs'))

    negative = random_mdp(8, 2, 0.9, rng, additive=False)
    control = decomposition_check(
        negative, rng.integers(0, negative.num_actions, size=8))
    checks.append(CheckResult(
        'decomposition_control', control, 1e-3, control > 1e-3,
        'residual with a non-additive global reward must be large'))

    seeds = 10 if long else 2
    samples = 10 ** 6 if long else 2 * 10 ** 5
    gaps = [
        check_convergence(seed * 1000 + index, samples)
        for index in range(seeds)]
    checks.append(CheckResult(
        'convergence', max(gaps), 0.01, max(gaps) <= 0.01,
        'worst relative policy gap over {:d} seeds'.format(seeds)))

    mismatches = check_factored_argmax(rng, tables=1000 if long else 200)
    checks.append(CheckResult(
        'factored_argmax', mismatches, 0, mismatches == 0,
        'tables where factored and enumerated argmax differ'))

    partition = check_reward_partition(
        rng, observations=10000 if long else 1000)
    checks.append(CheckResult(
        'reward_partition', partition, 1e-12, partition <= 1e-12,
        'max |sum R_c - R_shared|'))

    broken, checked = check_signal_machine()
    checks.append(CheckResult(
        'signal_machine', broken, 0, broken == 0,
        '{:d} transitions enumerated'.format(checked)))

    measured = selection_costs(range(2, 11), rng)
    costs = [row[:3] for row in measured]
    agents = [row[0] for row in measured]
    _, _, r_squared = linear_fit(agents, [row[1] for row in measured])
    doubling, _, _ = linear_fit(
        agents, np.log2([row[2] / row[0] for row in measured]))
    checks.append(CheckResult(
        'selection_cost', r_squared, 0.99,
        r_squared > 0.99 and abs(doubling - 1) < 0.01 and
        all(row[3] for row in measured),
        'R^2 of factored queries vs C; enumerated queries / C grow '
        'by {:.3f}x per agent'.format(2 ** doubling)))

    for check in checks:
        logger.info(
            'Check %s: %g (%s)', check.name, check.value,
            'ok' if check.passed else 'FAILED')
    return VerificationReport(checks, costs)
