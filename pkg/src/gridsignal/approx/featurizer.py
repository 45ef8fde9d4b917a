import numpy as np

from ..learn import GlobalObservation

# The number of signal phases
_NUM_PHASES = 4


class Featurizer:
    """Maps global states to input vectors of ``NeuralQ``.

    In ``'global'`` mode the vector concatenates the halting counts of
    all lanes divided by ``halting_scale``, the speed lags of all lanes
    divided by ``v_max``, and a one-hot encoding of every signal's
    phase. Agents that share a network would otherwise receive identical
    inputs, so if the group has more than one agent we append a one-hot
    encoding of the agent's position in the group. In ``'local'`` mode
    the vector only covers the incoming lanes and the phase of the
    agent's own intersection.
    """

    def __init__(
            self, net, v_max, agents, mode='global', halting_scale=None):
        """Initialize a new ``Featurizer``.

        Arguments:
            net (RoadNetwork): The network.
            v_max (float): The speed limit, in m/s.
            agents (list<int>): The intersection IDs of the agents of the
                policy group, in a fixed order.
            mode (str): ``'global'`` or ``'local'``.
            halting_scale (float): The divisor of the halting counts. By
                default, this is the number of stopped vehicles that fit
                on a block with 7.5 m per vehicle.
        """
        self._agents = list(agents)
        self._agent_index = {c: index for index, c in enumerate(agents)}
        self._mode = mode
        self._v_max = float(v_max)
        if halting_scale is None:
            halting_scale = net.block_length / 7.5
        self._halting_scale = float(halting_scale)
        self._num_lanes = net.num_lanes
        self._num_signals = net.num_intersections
        self._incoming = [
            net.lanes_of_intersection(c)[0]
            for c in range(net.num_intersections)]
        self._cached_state = None
        self._cached_base = None

    @property
    def agents(self):
        return list(self._agents)

    @property
    def input_dim(self):
        if self._mode == 'local':
            return 2 * 4 + _NUM_PHASES
        dim = 2 * self._num_lanes + _NUM_PHASES * self._num_signals
        if len(self._agents) > 1:
            dim += len(self._agents)
        return dim

    def _global_base(self, state):
        if state is not self._cached_state:
            phases = np.zeros((self._num_signals, _NUM_PHASES))
            phases[np.arange(self._num_signals), state.phases] = 1
            self._cached_base = np.concatenate((
                state.halting / self._halting_scale,
                state.speed_lag / self._v_max, phases.ravel()))
            self._cached_state = state
        return self._cached_base

    def features(self, state, agent):
        """Return the input vector of ``agent`` in ``state``.

        Arguments:
            state (GlobalObservation): The state.
            agent (int): The intersection ID of the agent.

        Returns:
            numpy.ndarray: A float32 vector of length ``input_dim``.
        """
        if self._mode == 'local':
            lanes = self._incoming[agent]
            phase = np.zeros(_NUM_PHASES)
            phase[state.phases[agent]] = 1
            return np.concatenate((
                state.halting[lanes] / self._halting_scale,
                state.speed_lag[lanes] / self._v_max,
                phase)).astype(np.float32)
        base = self._global_base(state)
        if len(self._agents) <= 1:
            return base.astype(np.float32)
        identity = np.zeros(len(self._agents))
        identity[self._agent_index[agent]] = 1
        return np.concatenate((base, identity)).astype(np.float32)

    def features_batch(self, states, agents):
        """Return a matrix whose rows are ``features(states[i], agents[i])``.
        """
        return np.stack([
            self.features(state, agent)
            for state, agent in zip(states, agents)])


class Discretizer:
    """Maps states to hashable keys of ``TabularQ``.

    ``GlobalObservation`` states become a tuple of the halting counts
    clipped to ``0 .. halting_cap``, the speed lags in ``speed_bins``
    uniform bins over ``0 .. v_max`` and the phase indices, over all
    lanes and signals in ``'global'`` mode or over the agent's incoming
    lanes and phase in ``'local'`` mode. Any other state is already a
    key (e.g. a state index of a finite MDP) and passes through as is.
    """

    def __init__(
            self, net=None, v_max=60.0, halting_cap=10, speed_bins=6,
            mode='global'):
        self._v_max = float(v_max)
        self._halting_cap = halting_cap
        self._speed_bins = speed_bins
        self._mode = mode
        if net is not None:
            self._incoming = [
                net.lanes_of_intersection(c)[0]
                for c in range(net.num_intersections)]
        else:
            self._incoming = None

    def key(self, state, agent):
        """Return the table key of ``state`` for ``agent``."""
        if not isinstance(state, GlobalObservation):
            return state
        halting = state.halting
        speed_lag = state.speed_lag
        phases = state.phases
        if self._mode == 'local':
            lanes = self._incoming[agent]
            halting = halting[lanes]
            speed_lag = speed_lag[lanes]
            phases = phases[[agent]]
        halting = np.clip(halting, 0, self._halting_cap).astype(np.int64)
        speed = np.clip(
            (speed_lag / self._v_max * self._speed_bins).astype(np.int64),
            0, self._speed_bins - 1)
        return tuple(
            int(value) for value in np.concatenate((halting, speed, phases)))
