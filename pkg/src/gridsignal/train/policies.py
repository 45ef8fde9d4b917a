import numpy as np

from ..errors import InvalidArgumentError
from ..learn import select_joint_action
from ..signal import ActuatedConfig
from ..signal import StaticSchedule
from ..signal import actuated_controller
from ..signal import static_controller


class Policy:
    """Abstract base class for a joint signal controller."""

    # The controller name used in reports and on the command line
    NAME = None

    def actions(self, env, rng):
        """Return the joint action for the current step of ``env``.

        Arguments:
            env (TrafficEnvironment): The environment.
            rng (numpy.random.Generator): The random number generator.

        Returns:
            numpy.ndarray: One entry in ``{0, 1}`` per intersection.
        """
        raise NotImplementedError('Subclasses must implement')


class StaticPolicy(Policy):
    """Runs every signal on the same fixed-time plan."""

    NAME = 'static'

    def __init__(self, schedule=None):
        self.schedule = schedule if schedule is not None else StaticSchedule()

    def actions(self, env, rng):
        return np.array([
            static_controller(signal, self.schedule)
            for signal in env.signals], dtype=np.int64)


class ActuatedPolicy(Policy):
    """Runs the gap-out actuated controller at every signal."""

    NAME = 'actuated'

    def __init__(self, config=None):
        self.config = config if config is not None else ActuatedConfig()

    def actions(self, env, rng):
        return np.array([
            actuated_controller(
                signal, env.incoming_observations(signal.intersection),
                self.config)
            for signal in env.signals], dtype=np.int64)


class ThresholdPolicy(ActuatedPolicy):
    """The actuated controller that also switches toward long red queues.
    """

    NAME = 'threshold'

    def __init__(self, config=None):
        if config is None:
            config = ActuatedConfig(queue_threshold=30.0)
        elif config.queue_threshold is None:
            raise InvalidArgumentError(
                'The threshold controller requires queue_threshold',
                'queue_threshold')
        super().__init__(config)


class LearnedPolicy(Policy):
    """Selects joint actions from per-signal Q-functions.

    Public attributes:

    list<PerSignalQ> qs - The agents, indexed by intersection ID.
    float epsilon - The exploration probability.
    """

    NAME = 'learned'

    def __init__(self, qs, epsilon=0.0):
        self.qs = qs
        self.epsilon = epsilon

    def actions(self, env, rng):
        return select_joint_action(self.qs, env.agent_state, self.epsilon, rng)
