import numpy as np

from ..errors import InvalidArgumentError


def joint_index(actions):
    """Return the index ``sum_c a_c * 2^c`` of a joint action."""
    return int(sum(int(action) << c for c, action in enumerate(actions)))


def joint_actions(index, num_agents):
    """Return the joint action with the given index, as a list of bits."""
    return [(index >> c) & 1 for c in range(num_agents)]


class FiniteMDP:
    """A finite decision process with ``C`` binary-action agents.

    Joint actions are indexed by ``sum_c a_c * 2^c``. Every agent has its
    own reward function of the state and the joint action. The global
    reward is the sum of the agents' rewards unless given explicitly.

    Public attributes:

    numpy.ndarray transitions - A ``S x 2^C x S`` array of transition
        probabilities.
    numpy.ndarray rewards - A ``C x S x 2^C`` array of agent rewards.
    numpy.ndarray global_reward - A ``S x 2^C`` array of global rewards.
    float gamma - The discount factor.
    """

    # The maximum number of state-action pairs
    MAX_PAIRS = 10 ** 6

    def __init__(self, transitions, rewards, gamma, global_reward=None):
        transitions = np.asarray(transitions, dtype=np.float64)
        rewards = np.asarray(rewards, dtype=np.float64)
        if (transitions.ndim != 3 or
                transitions.shape[0] != transitions.shape[2]):
            raise InvalidArgumentError(
                'transitions must have shape S x A x S', 'transitions')
        num_states, num_actions, _ = transitions.shape
        num_agents = rewards.shape[0] if rewards.ndim == 3 else -1
        if num_agents < 1 or num_actions != 1 << num_agents:
            raise InvalidArgumentError(
                'The number of joint actions must be 2^C', 'transitions')
        if rewards.shape != (num_agents, num_states, num_actions):
            raise InvalidArgumentError(
                'rewards must have shape C x S x 2^C', 'rewards')
        if num_states * num_actions > FiniteMDP.MAX_PAIRS:
            raise InvalidArgumentError(
                'Too many state-action pairs', 'transitions')
        if np.any(transitions < 0) or not np.allclose(
                transitions.sum(axis=2), 1, rtol=0, atol=1e-12):
            raise InvalidArgumentError(
                'Transition rows must be distributions', 'transitions')
        if not np.all(np.isfinite(rewards)):
            raise InvalidArgumentError('Rewards must be finite', 'rewards')
        if not 0 <= gamma < 1:
            raise InvalidArgumentError('gamma must be in [0, 1)', 'gamma')
        if global_reward is None:
            global_reward = rewards.sum(axis=0)
        else:
            global_reward = np.asarray(global_reward, dtype=np.float64)
            if global_reward.shape != (num_states, num_actions):
                raise InvalidArgumentError(
                    'global_reward must have shape S x 2^C', 'global_reward')
        self.transitions = transitions
        self.rewards = rewards
        self.global_reward = global_reward
        self.gamma = float(gamma)

    @property
    def num_states(self):
        return self.transitions.shape[0]

    @property
    def num_agents(self):
        return self.rewards.shape[0]

    @property
    def num_actions(self):
        return self.transitions.shape[1]

    def step(self, state, action, rng):
        """Sample the successor of ``state`` under a joint action index."""
        return int(
            rng.choice(self.num_states, p=self.transitions[state, action]))


def random_mdp(num_states, num_agents, gamma, rng, additive=True):
    """Return a random ``FiniteMDP`` with dense transitions.

    Arguments:
        num_states (int): The number of states.
        num_agents (int): The number of agents.
        gamma (float): The discount factor.
        rng (numpy.random.Generator): The random number generator.
        additive (bool): Whether the global reward is the sum of the
            agent rewards. If not, we perturb it so that it is not.
    """
    num_actions = 1 << num_agents
    transitions = rng.dirichlet(
        np.ones(num_states), size=(num_states, num_actions))
    rewards = rng.normal(size=(num_agents, num_states, num_actions))
    global_reward = None
    if not additive:
        global_reward = rewards.sum(axis=0) + rng.uniform(
            0.5, 1.5, size=(num_states, num_actions))
    return FiniteMDP(transitions, rewards, gamma, global_reward)


def factored_mdp(local_states, gamma, rng):
    """Return a random MDP made of independent per-agent chains.

    Agent ``c`` has its own chain over ``local_states[c]`` states whose
    transitions and rewards depend only on its own state and action.
    The joint state is the mixed-radix combination of the local states,
    with agent 0 varying fastest. Rewards are uniform in ``[0, 1]``.

    Arguments:
        local_states (list<int>): The number of states of each agent.
        gamma (float): The discount factor.
        rng (numpy.random.Generator): The random number generator.

    Returns:
        FiniteMDP: The MDP.
    """
    num_agents = len(local_states)
    local_transitions = [
        rng.dirichlet(np.ones(size), size=(size, 2)) for size in local_states]
    local_rewards = [rng.uniform(size=(size, 2)) for size in local_states]
    num_states = int(np.prod(local_states))
    num_actions = 1 << num_agents

    def local_state(state, c):
        return (state // int(np.prod(local_states[:c]))) % local_states[c]

    transitions = np.ones((num_states, num_actions, num_states))
    rewards = np.zeros((num_agents, num_states, num_actions))
    next_states = np.arange(num_states)
    for state in range(num_states):
        for action in range(num_actions):
            bits = joint_actions(action, num_agents)
            for c in range(num_agents):
                s_c = local_state(state, c)
                transitions[state, action] *= local_transitions[c][
                    s_c, bits[c], local_state(next_states, c)]
                rewards[c, state, action] = local_rewards[c][s_c, bits[c]]
    return FiniteMDP(transitions, rewards, gamma)
