import numbers

import numpy as np

from ..errors import InvalidArgumentError


class GlobalObservation:
    """The global state ``s`` of the network at one decision step.

    ``GlobalObservation`` objects are immutable and may be shared by
    any number of transitions.

    Public attributes:

    int step - The step index ``k``.
    numpy.ndarray halting - The number of halting vehicles on each lane,
        indexed by lane ID. This has ``M`` entries.
    numpy.ndarray speed_lag - The mean speed lag ``dV_m`` of each lane,
        indexed by lane ID. This has ``M`` entries.
    numpy.ndarray phases - The phase index (0 to 3) of each signal,
        indexed by intersection ID. This has ``C`` entries.
    """

    def __init__(self, step, halting, speed_lag, phases):
        halting = np.asarray(halting, dtype=np.float64)
        speed_lag = np.asarray(speed_lag, dtype=np.float64)
        phases = np.asarray(phases, dtype=np.int64)
        if halting.shape != speed_lag.shape or halting.ndim != 1:
            raise InvalidArgumentError(
                'halting and speed_lag must be vectors of equal length',
                'halting')
        if phases.ndim != 1:
            raise InvalidArgumentError('phases must be a vector', 'phases')
        if (not np.all(np.isfinite(halting)) or
                not np.all(np.isfinite(speed_lag))):
            raise InvalidArgumentError(
                'Observations must be finite', 'halting')
        if np.any((phases < 0) | (phases > 3)):
            raise InvalidArgumentError(
                'Phase indices must be between 0 and 3', 'phases')
        halting.flags.writeable = False
        speed_lag.flags.writeable = False
        phases.flags.writeable = False
        self.step = step
        self.halting = halting
        self.speed_lag = speed_lag
        self.phases = phases

    @property
    def num_lanes(self):
        return len(self.halting)

    @property
    def num_signals(self):
        return len(self.phases)

    def __eq__(self, other):
        return (
            isinstance(other, GlobalObservation) and
            self.step == other.step and
            np.array_equal(self.halting, other.halting) and
            np.array_equal(self.speed_lag, other.speed_lag) and
            np.array_equal(self.phases, other.phases))

    def __hash__(self):
        return hash((
            self.step, self.halting.tobytes(), self.speed_lag.tobytes(),
            self.phases.tobytes()))

    def __repr__(self):
        return 'GlobalObservation(step={:d}, M={:d}, C={:d})'.format(
            self.step, self.num_lanes, self.num_signals)


def assemble_state(lane_obs, signal_states, step=0, net=None):
    """Pack per-lane observations and signal states into a global state.

    The inputs may be given in any order; the result is packed by lane
    ID and by intersection ID.

    Arguments:
        lane_obs (iterable<LaneObservation>): One observation per lane.
        signal_states (iterable<SignalState>): One state per signal.
        step (int): The step index.
        net (RoadNetwork): The network, if the counts should be checked
            against it.

    Returns:
        GlobalObservation: The state.

    Raises:
        InvalidArgumentError: If the lane IDs are not exactly
            ``range(M)`` or the intersection IDs are not exactly
            ``range(C)``.
    """
    lane_obs = sorted(lane_obs, key=lambda obs: obs.lane)
    signal_states = sorted(signal_states, key=lambda sig: sig.intersection)
    if [obs.lane for obs in lane_obs] != list(range(len(lane_obs))):
        raise InvalidArgumentError(
            'The lane observations must cover each lane exactly once',
            'lane_obs')
    if ([sig.intersection for sig in signal_states] !=
            list(range(len(signal_states)))):
        raise InvalidArgumentError(
            'The signal states must cover each intersection exactly once',
            'signal_states')
    if net is not None:
        if len(lane_obs) != net.num_lanes:
            raise InvalidArgumentError(
                'Expected {:d} lane observations, got {:d}'.format(
                    net.num_lanes, len(lane_obs)),
                'lane_obs')
        if len(signal_states) != net.num_intersections:
            raise InvalidArgumentError(
                'Expected {:d} signal states, got {:d}'.format(
                    net.num_intersections, len(signal_states)),
                'signal_states')
    if not isinstance(step, numbers.Integral) or step < 0:
        raise InvalidArgumentError(
            'The step must be a non-negative integer', 'step')
    return GlobalObservation(
        int(step),
        [obs.halting for obs in lane_obs],
        [obs.speed_lag for obs in lane_obs],
        [sig.phase.index for sig in signal_states])
