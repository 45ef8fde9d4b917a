class Transition:
    """One step of experience of one agent.

    Public attributes:

    int agent - The intersection ID of the agent.
    state - The state ``s``: a ``GlobalObservation``, or any hashable
        value when learning on a finite MDP.
    int action - The local action ``a_c`` taken in ``s``.
    float reward - The local reward ``R_c``.
    next_state - The state ``s'``.
    int next_action - The local action ``a_c'`` taken in ``s'``. The
        SARSA target uses this.
    bool terminal - Whether ``s'`` ends the episode, so that the target
        is ``(1 - gamma) * R`` alone. Rollouts that stop at a step limit
        are not terminal.
    """

    __slots__ = (
        'agent', 'state', 'action', 'reward', 'next_state', 'next_action',
        'terminal')

    def __init__(
            self, agent, state, action, reward, next_state, next_action,
            terminal=False):
        self.agent = agent
        self.state = state
        self.action = action
        self.reward = reward
        self.next_state = next_state
        self.next_action = next_action
        self.terminal = terminal

    def __repr__(self):
        return 'Transition(agent={:d}, a={:d}, R={:g}, a\'={:d})'.format(
            self.agent, self.action, self.reward, self.next_action)
