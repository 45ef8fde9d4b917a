import numpy as np

from ..approx import TabularQ
from ..approx import ValueApproximator
from ..learn import PerSignalQ
from ..learn import PolicyGroup
from ..learn import Transition
from ..learn import greedy_actions
from ..learn import joint_q_values
from ..learn import q_update
from ..learn import select_joint_action
from .finite_mdp import joint_actions
from .finite_mdp import joint_index
from .solvers import evaluate_policy
from .solvers import value_iterate


def learn_decentralized(mdp, samples, epsilon, learn_config, rng):
    """Run decentralized tabular Q-learning on a finite MDP.

    Every agent learns its own ``Q_c(s, a_c)`` from its own reward along
    one trajectory. The agents act with per-agent epsilon-greedy
    exploration around the factored argmax.

    Arguments:
        mdp (FiniteMDP): The MDP.
        samples (int): The number of environment steps.
        epsilon (float): The exploration probability.
        learn_config (LearnConfig): The learning parameters. ``gamma``
            should equal the MDP's discount factor.
        rng (numpy.random.Generator): The random number generator.

    Returns:
        list<PerSignalQ>: The learned Q-functions, one per agent. They
            share one ``TabularQ``.
    """
    table = TabularQ()
    qs = [
        PerSignalQ(c, table, PolicyGroup.SHARED)
        for c in range(mdp.num_agents)]
    state = int(rng.integers(mdp.num_states))
    actions = select_joint_action(qs, state, epsilon, rng)
    for _ in range(samples):
        action = joint_index(actions)
        next_state = mdp.step(state, action, rng)
        next_actions = select_joint_action(qs, next_state, epsilon, rng)
        for c, q in enumerate(qs):
            q_update(
                q,
                Transition(
                    c, state, int(actions[c]),
                    float(mdp.rewards[c, state, action]), next_state,
                    int(next_actions[c])),
                learn_config)
        state = next_state
        actions = next_actions
    return qs


def greedy_joint_policy(qs, num_states):
    """Return the factored greedy joint action index of every state."""
    return np.array([
        joint_index(greedy_actions(joint_q_values(qs, state)))
        for state in range(num_states)])


def policy_gap(mdp, policy):
    """Return the relative shortfall of a policy against the optimum.

    This is ``(mean V* - mean V_pi) / |mean V*|``, with the means taken
    over the states and the values of the global reward.
    """
    _, optimal_policy = value_iterate(mdp)
    optimal = evaluate_policy(mdp, optimal_policy).value.mean()
    achieved = evaluate_policy(mdp, policy).value.mean()
    return float((optimal - achieved) / max(abs(optimal), 1e-12))


def brute_force_joint_action(values):
    """Return the joint argmax of ``sum_c Q_c(s, a_c)`` by enumeration.

    Arguments:
        values (numpy.ndarray): A ``C x 2`` array of per-signal values.

    Returns:
        tuple<numpy.ndarray, int>: The joint action with the largest
            sum, ties going to the lowest joint index, and the number of
            per-signal values read, i.e. ``C * 2^C``.
    """
    values = np.asarray(values, dtype=np.float64)
    num_agents = len(values)
    bits = (
        np.arange(1 << num_agents)[:, np.newaxis] >>
        np.arange(num_agents)) & 1
    totals = values[np.arange(num_agents), bits].sum(axis=1)
    return bits[int(np.argmax(totals))].astype(np.int64), bits.size


class CountingApproximator(ValueApproximator):
    """A fixed table of per-signal values that counts its queries.

    Public attributes:

    int queries - The number of ``q_values`` calls so far.
    """

    KIND = 'counting'

    def __init__(self, values):
        """Initialize a new ``CountingApproximator``.

        Arguments:
            values (numpy.ndarray): A ``C x 2`` array whose row ``c``
                holds the values of agent ``c`` in every state.
        """
        self._values = np.asarray(values, dtype=np.float64)
        self.queries = 0

    def q_values(self, state, agent):
        self.queries += 1
        return self._values[agent].copy()


def enumerate_joint_action(qs, state):
    """Return the joint argmax of ``sum_c Q_c(s, a_c)`` by enumeration.

    Every joint action queries every agent again, so this makes
    ``C * 2^C`` approximator queries. Ties go to the lowest joint index.

    Arguments:
        qs (list<PerSignalQ>): The agents, indexed by intersection ID.
        state: The state.

    Returns:
        numpy.ndarray: The joint action.
    """
    best = None
    best_total = -np.inf
    for index in range(1 << len(qs)):
        actions = joint_actions(index, len(qs))
        total = sum(
            q.q_values(state)[action] for q, action in zip(qs, actions))
        if total > best_total:
            best = actions
            best_total = total
    return np.array(best, dtype=np.int64)


def selection_costs(agent_counts, rng):
    """Count the approximator queries of factored and enumerated selection.

    For each agent count ``C`` we draw random values, select the joint
    action both ways, and count the queries each way makes.

    Arguments:
        agent_counts (iterable<int>): The values of ``C``.
        rng (numpy.random.Generator): The random number generator.

    Returns:
        list<tuple<int, int, int, bool>>: For each ``C``, the queries of
            the factored argmax, those of enumeration, and whether both
            selected the same joint action.
    """
    costs = []
    for num_agents in agent_counts:
        approximator = CountingApproximator(
            rng.normal(size=(num_agents, 2)))
        qs = [
            PerSignalQ(c, approximator, PolicyGroup.SHARED)
            for c in range(num_agents)]
        factored = greedy_actions(joint_q_values(qs, 0))
        factored_queries = approximator.queries
        enumerated = enumerate_joint_action(qs, 0)
        costs.append((
            num_agents, factored_queries,
            approximator.queries - factored_queries,
            bool(np.array_equal(factored, enumerated))))
    return costs


def linear_fit(xs, ys):
    """Return the slope, intercept and R^2 of a least-squares line."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = np.sum((ys - (slope * xs + intercept)) ** 2)
    total = np.sum((ys - ys.mean()) ** 2)
    r_squared = 1.0 - residual / total if total > 0 else 1.0
    return float(slope), float(intercept), float(r_squared)
