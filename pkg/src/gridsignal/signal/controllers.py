from ..errors import InvalidArgumentError
from .signal_state import SignalState


class StaticSchedule:
    """A fixed-time signal plan.

    Public attributes:

    float green_ns - The green time of the north-south phase (GrGr), in
        seconds.
    float green_ew - The green time of the east-west phase (rGrG), in
        seconds.
    """

    FIELDS = ('green_ns', 'green_ew')

    PUBLISHED_FIELDS = ()

    def __init__(self, green_ns=30.0, green_ew=30.0):
        for name, value in (('green_ns', green_ns), ('green_ew', green_ew)):
            if value < SignalState.MIN_GREEN_TIME:
                raise InvalidArgumentError(
                    '{:s} may not be less than the minimum green time'.format(
                        name),
                    name)
        self.green_ns = float(green_ns)
        self.green_ew = float(green_ew)

    def green_time(self, phase):
        """Return the scheduled duration of the given green phase."""
        if phase.indication(0) == 'G':
            return self.green_ns
        return self.green_ew

    def cycle_time(self):
        """Return the duration of one full cycle, in seconds."""
        return self.green_ns + self.green_ew + 2 * SignalState.YELLOW_TIME

    def to_json(self):
        return {'green_ns': self.green_ns, 'green_ew': self.green_ew}


def static_controller(sig, schedule):
    """Return the action of a fixed-time plan.

    This is a pure function of the phase and its elapsed time: we
    switch exactly when the green has lasted its scheduled time.

    Arguments:
        sig (SignalState): The signal state.
        schedule (StaticSchedule): The plan.

    Returns:
        int: ``SignalState.SWITCH`` or ``SignalState.HOLD``.
    """
    if (sig.phase.is_green and
            sig.elapsed >= schedule.green_time(sig.phase) - 1e-9):
        return SignalState.SWITCH
    return SignalState.HOLD


class ActuatedConfig:
    """The parameters of the gap-out actuated controller.

    Public attributes:

    float min_green - We never request a switch before a green phase
        has lasted this many seconds.
    float max_green - We always request a switch once a green phase has
        lasted this many seconds.
    float gap_threshold - A served lane carries a continuous stream if
        its first vehicle reaches the stop line within this many seconds.
    float queue_threshold - If not ``None``, the queue length in meters
        on a red approach above which we switch toward that approach
        when its queue is also longer than the served queues. This is
        the intersection-level threshold algorithm.
    """

    FIELDS = ('min_green', 'max_green', 'gap_threshold', 'queue_threshold')

    PUBLISHED_FIELDS = ('min_green',)

    def __init__(
            self, min_green=3.0, max_green=90.0, gap_threshold=3.0,
            queue_threshold=None):
        if min_green < SignalState.MIN_GREEN_TIME:
            raise InvalidArgumentError(
                'min_green may not be less than {:g} s'.format(
                    SignalState.MIN_GREEN_TIME),
                'min_green')
        if max_green < min_green:
            raise InvalidArgumentError(
                'max_green may not be less than min_green', 'max_green')
        if not gap_threshold > 0:
            raise InvalidArgumentError(
                'gap_threshold must be positive', 'gap_threshold')
        if queue_threshold is not None and not queue_threshold > 0:
            raise InvalidArgumentError(
                'queue_threshold must be positive', 'queue_threshold')
        self.min_green = float(min_green)
        self.max_green = float(max_green)
        self.gap_threshold = float(gap_threshold)
        self.queue_threshold = (
            None if queue_threshold is None else float(queue_threshold))

    def to_json(self):
        return {name: getattr(self, name) for name in ActuatedConfig.FIELDS}


def actuated_controller(sig, obs, cfg):
    """Return the action of the gap-out actuated controller.

    During green we hold while any served lane carries a continuous
    stream, i.e. a halting vehicle or a vehicle arriving within
    ``gap_threshold`` seconds, and we switch once a sufficient gap
    appears or the green has lasted ``max_green`` seconds. With
    ``queue_threshold`` set we also switch when a red approach has a
    queue longer than the threshold and longer than every served queue.

    Arguments:
        sig (SignalState): The signal state.
        obs (list<LaneObservation>): The observations of the incoming
            lanes, in order of the approach sides N, E, S, W.
        cfg (ActuatedConfig): The controller parameters.

    Returns:
        int: ``SignalState.SWITCH`` or ``SignalState.HOLD``.
    """
    if not sig.phase.is_green or sig.elapsed < cfg.min_green - 1e-9:
        return SignalState.HOLD
    if sig.elapsed >= cfg.max_green - 1e-9:
        return SignalState.SWITCH
    served = []
    waiting = []
    for index, lane_obs in enumerate(obs):
        if sig.phase.indication(index) == 'G':
            served.append(lane_obs)
        else:
            waiting.append(lane_obs)

    if cfg.queue_threshold is not None and waiting:
        red_queue = max(lane_obs.queue_length for lane_obs in waiting)
        served_queue = max(
            [lane_obs.queue_length for lane_obs in served], default=0.0)
        if red_queue > cfg.queue_threshold and red_queue > served_queue:
            return SignalState.SWITCH

    for lane_obs in served:
        if (lane_obs.halting > 0 or
                lane_obs.approach_time < cfg.gap_threshold):
            return SignalState.HOLD
    return SignalState.SWITCH
