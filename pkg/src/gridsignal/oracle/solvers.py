import logging

import numpy as np

from ..errors import InvalidArgumentError

logger = logging.getLogger(__name__)


class PolicyEvaluation:
    """The normalized Q-functions of a fixed joint policy.

    Public attributes:

    numpy.ndarray q - The ``S x 2^C`` Q-function of the global reward.
    numpy.ndarray q_agents - The ``C x S x 2^C`` Q-functions of the agent
        rewards.
    numpy.ndarray value - The ``S`` state values of the global reward.
    """

    def __init__(self, q, q_agents, value):
        self.q = q
        self.q_agents = q_agents
        self.value = value


def policy_matrix(mdp, policy):
    """Return a policy as an ``S x 2^C`` matrix of action probabilities.

    Arguments:
        mdp (FiniteMDP): The MDP.
        policy (array-like): Either one joint action index per state or
            an ``S x 2^C`` matrix of probabilities.
    """
    policy = np.asarray(policy)
    if policy.ndim == 1:
        if policy.shape != (mdp.num_states,):
            raise InvalidArgumentError(
                'The policy must give one action per state', 'policy')
        matrix = np.zeros((mdp.num_states, mdp.num_actions))
        matrix[np.arange(mdp.num_states), policy.astype(np.int64)] = 1
        return matrix
    if policy.shape != (mdp.num_states, mdp.num_actions):
        raise InvalidArgumentError(
            'The policy matrix must have shape S x 2^C', 'policy')
    return policy.astype(np.float64)


def _evaluate_reward(mdp, reward, matrix):
    # V = (1 - gamma) R_pi + gamma P_pi V, then Q = (1 - gamma) R + gamma P V
    gamma = mdp.gamma
    reward_pi = np.sum(matrix * reward, axis=1)
    transitions_pi = np.einsum('sa,sat->st', matrix, mdp.transitions)
    value = np.linalg.solve(
        np.eye(mdp.num_states) - gamma * transitions_pi,
        (1 - gamma) * reward_pi)
    q = (1 - gamma) * reward + gamma * mdp.transitions @ value
    return q, value


def evaluate_policy(mdp, policy):
    """Solve the normalized Bellman evaluation equations of a policy.

    The Q-function satisfies ``Q = (1 - gamma) R + gamma P V`` with
    ``V(s) = sum_a pi(a | s) Q(s, a)``. We solve it exactly for the
    global reward and for every agent reward.

    Arguments:
        mdp (FiniteMDP): The MDP.
        policy (array-like): The joint policy; see ``policy_matrix``.

    Returns:
        PolicyEvaluation: The Q-functions.
    """
    if not 0 <= mdp.gamma < 1:
        raise InvalidArgumentError('gamma must be in [0, 1)', 'gamma')
    matrix = policy_matrix(mdp, policy)
    q, value = _evaluate_reward(mdp, mdp.global_reward, matrix)
    q_agents = np.stack([
        _evaluate_reward(mdp, mdp.rewards[c], matrix)[0]
        for c in range(mdp.num_agents)])
    return PolicyEvaluation(q, q_agents, value)


def value_iterate(mdp, tolerance=1e-10, max_sweeps=1000000):
    """Compute the optimal normalized Q-function of the global reward.

    We apply ``Q <- (1 - gamma) R + gamma P max_a Q`` until successive
    iterates differ by at most ``tolerance`` in the sup norm.

    Returns:
        tuple<numpy.ndarray, numpy.ndarray>: The ``S x 2^C`` optimal
            Q-function and the optimal joint action index of each state.
            Ties go to the lowest index.
    """
    gamma = mdp.gamma
    q = (1 - gamma) * mdp.global_reward
    for sweep in range(max_sweeps):
        new_q = (
            (1 - gamma) * mdp.global_reward +
            gamma * mdp.transitions @ np.max(q, axis=1))
        residual = np.max(np.abs(new_q - q))
        q = new_q
        if residual <= tolerance:
            break
    else:
        logger.warning(
            'Value iteration stopped after %d sweeps (residual %g)',
            max_sweeps, residual)
    logger.debug('Value iteration converged after %d sweeps', sweep + 1)
    return q, np.argmax(q, axis=1)


def decomposition_check(mdp, policy):
    """Return ``max |Q - sum_c Q_c|`` over all states and joint actions."""
    evaluation = evaluate_policy(mdp, policy)
    return float(np.max(np.abs(
        evaluation.q - evaluation.q_agents.sum(axis=0))))
