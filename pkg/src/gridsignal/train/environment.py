import numpy as np

from ..learn import assemble_state
from ..learn import rewards_per_signal
from ..signal import SignalState
from ..sim import Microsim
from ..sim import WorldState


class TrafficEnvironment:
    """A grid simulation viewed as a decentralized decision process.

    Each call to ``step`` advances every signal by the joint action,
    injects new vehicles, moves the vehicles by one step, and returns
    the new global state and the per-signal rewards. ``reset`` returns
    an empty network with every signal at the start of GrGr.

    Public attributes:

    RoadNetwork net - The network.
    SimConfig sim_config - The simulation parameters.
    WorldState world - The current simulation state.
    list<SignalState> signals - The current signal states, indexed by
        intersection ID.
    list<LaneObservation> lane_observations - The current lane
        observations, indexed by lane ID.
    GlobalObservation state - The current global state.
    MetricsRecord metrics - The metrics of the current step.
    """

    def __init__(
            self, net, sim_config, weights, policy_mode='shared',
            delayed_observation=False):
        """Initialize a new ``TrafficEnvironment``.

        Arguments:
            net (RoadNetwork): The network.
            sim_config (SimConfig): The simulation parameters.
            weights (RewardWeights): The reward weights.
            policy_mode (str): ``'shared'`` or ``'multi'``. This selects
                the reward weights of each signal.
            delayed_observation (bool): Whether the agents observe the
                state of the previous step instead of the current one.
                Rewards always use the current state.
        """
        self.net = net
        self.sim_config = sim_config
        self._weights = weights
        self._policy_mode = policy_mode
        self._delayed = delayed_observation
        self.world = None
        self.signals = None
        self.lane_observations = None
        self.state = None
        self.metrics = None
        self._previous_state = None
        self._rng = None

    def reset(self, seed):
        """Start a new episode.

        Arguments:
            seed (int): The seed of the episode. Together with the
                simulation's ``rng_seed``, it seeds the inflow process.

        Returns:
            GlobalObservation: The initial state.
        """
        self._rng = np.random.default_rng(
            np.random.SeedSequence([self.sim_config.rng_seed, seed]))
        self.world = WorldState(self.net, self.sim_config)
        self.signals = [
            SignalState(c) for c in range(self.net.num_intersections)]
        self._observe()
        self._previous_state = self.state
        return self.state

    def _observe(self):
        self.lane_observations = Microsim.observe_lanes(self.world, self.net)
        self.state = assemble_state(
            self.lane_observations, self.signals, self.world.step, self.net)
        self.metrics = Microsim.snapshot_metrics(
            self.world, self.net, self.lane_observations)

    @property
    def agent_state(self):
        """The state the agents act on."""
        if self._delayed:
            return self._previous_state
        return self.state

    def incoming_observations(self, c):
        """Return the observations of the incoming lanes of ``c``.

        Returns:
            list<LaneObservation>: The observations, in order of the
                approach sides N, E, S, W.
        """
        incoming, _ = self.net.lanes_of_intersection(c)
        return [self.lane_observations[lane] for lane in incoming]

    def step(self, actions):
        """Advance the environment by one step.

        Arguments:
            actions (numpy.ndarray): The joint action, one entry in
                ``{0, 1}`` per intersection.

        Returns:
            tuple<GlobalObservation, numpy.ndarray>: The state the agents
                observe next and the per-signal rewards.

        Raises:
            SimulationFault: If the dynamics break an invariant.
        """
        dt = self.sim_config.dt
        self.signals = [
            signal.advance(int(action), dt)
            for signal, action in zip(self.signals, actions)]
        Microsim.inject_inflow(
            self.world, self.net, self.sim_config, self._rng)
        Microsim.step_vehicles(
            self.world, self.net, self.signals, self.sim_config)
        self._previous_state = self.state
        self._observe()
        rewards = rewards_per_signal(
            self.state, self.net, self._weights, self._policy_mode)
        return self.agent_state, rewards
