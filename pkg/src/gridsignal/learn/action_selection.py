import numpy as np

from ..errors import InvalidArgumentError
from ..errors import NumericFault


def greedy_actions(values):
    """Return the factored argmax of a table of per-signal values.

    Arguments:
        values (numpy.ndarray): A ``C x 2`` array whose row ``c`` holds
            ``Q_c(s, 0)`` and ``Q_c(s, 1)``.

    Returns:
        numpy.ndarray: The joint action, a vector of ``C`` entries in
            ``{0, 1}``. Ties select 0 (hold).
    """
    values = np.asarray(values, dtype=np.float64)
    return (values[:, 1] > values[:, 0]).astype(np.int64)


def joint_q_values(qs, state):
    """Return the ``C x 2`` table of ``Q_c(s, a_c)`` for all agents.

    Agents that share an approximator are evaluated in one batch when
    the approximator supports ``q_values_batch``.

    Arguments:
        qs (list<PerSignalQ>): The agents, indexed by intersection ID.
        state: The state.
    """
    values = np.empty((len(qs), 2))
    by_approximator = {}
    for q in qs:
        by_approximator.setdefault(id(q.approximator), []).append(q)
    for group in by_approximator.values():
        approximator = group[0].approximator
        agents = [q.intersection for q in group]
        if hasattr(approximator, 'q_values_batch'):
            values[agents] = approximator.q_values_batch(state, agents)
        else:
            for q in group:
                values[q.intersection] = approximator.q_values(
                    state, q.intersection)
    if not np.all(np.isfinite(values)):
        raise NumericFault('Non-finite Q values in joint action selection')
    return values


def select_joint_action(qs, state, epsilon, rng):
    """Select the joint action with per-agent epsilon-greedy exploration.

    Each agent independently takes the argmax of its own Q-function,
    which maximizes the sum of the Q-functions over all ``2^C`` joint
    actions, and with probability ``epsilon`` replaces it with a
    uniformly random action. This takes time linear in ``C``.

    Arguments:
        qs (list<PerSignalQ>): The agents, indexed by intersection ID.
        state: The state ``s``.
        epsilon (float): The exploration probability, in ``[0, 1]``.
        rng (numpy.random.Generator): The random number generator. We
            always draw ``2 * C`` numbers, so the random stream does not
            depend on the Q values.

    Returns:
        numpy.ndarray: The joint action, a vector of ``C`` entries in
            ``{0, 1}``.
    """
    if not 0 <= epsilon <= 1:
        raise InvalidArgumentError('epsilon must be in [0, 1]', 'epsilon')
    explore = rng.random(len(qs)) < epsilon
    random_actions = rng.integers(0, 2, size=len(qs))
    if epsilon >= 1:
        return random_actions.astype(np.int64)
    actions = greedy_actions(joint_q_values(qs, state))
    return np.where(explore, random_actions, actions).astype(np.int64)
