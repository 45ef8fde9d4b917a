from ..errors import InvalidArgumentError
from .phase import Phase


class SignalState:
    """The phase machine of the signal at one intersection.

    ``SignalState`` objects are immutable; ``advance`` returns a new
    object. Yellow phases last exactly ``YELLOW_TIME`` seconds and then
    advance on their own. A green phase may only be left once it has
    lasted ``MIN_GREEN_TIME`` seconds; earlier switch requests are
    dropped, as are switch requests during yellow.

    Public attributes:

    int intersection - The ID of the intersection.
    Phase phase - The current phase.
    float elapsed - The number of seconds spent in the current phase.
    Phase pending_target - The green phase we will enter when the
        current yellow phase expires, or ``None`` during green.
    """

    # The duration of a yellow phase, in seconds
    YELLOW_TIME = 2.0

    # The minimum duration of a green phase, in seconds
    MIN_GREEN_TIME = 3.0

    # Tolerance for comparing accumulated float durations
    _EPS = 1e-9

    HOLD = 0
    SWITCH = 1

    def __init__(
            self, intersection, phase=Phase.GRGR, elapsed=0.0,
            pending_target=None):
        self.intersection = intersection
        self.phase = phase
        self.elapsed = elapsed
        self.pending_target = pending_target

    def advance(self, action, dt=1.0):
        """Return the state after one time step.

        Arguments:
            action (int): ``HOLD`` (0) or ``SWITCH`` (1).
            dt (float): The duration of the step, in seconds.

        Returns:
            SignalState: The new state.
        """
        if dt <= 0:
            raise InvalidArgumentError('The time step must be positive', 'dt')
        if self.phase.is_yellow:
            if self.elapsed + dt >= SignalState.YELLOW_TIME - self._EPS:
                return SignalState(self.intersection, self.phase.next(), 0.0)
            return SignalState(
                self.intersection, self.phase, self.elapsed + dt,
                self.pending_target)
        if (action == SignalState.SWITCH and
                self.elapsed >= SignalState.MIN_GREEN_TIME - self._EPS):
            yellow = self.phase.next()
            return SignalState(self.intersection, yellow, 0.0, yellow.next())
        return SignalState(self.intersection, self.phase, self.elapsed + dt)

    def can_switch(self):
        """Return whether a switch request would be honored right now."""
        return (
            self.phase.is_green and
            self.elapsed >= SignalState.MIN_GREEN_TIME - self._EPS)

    def indication(self, signal_index):
        """Return the indication shown to the given approach side."""
        return self.phase.indication(signal_index)

    def __eq__(self, other):
        return (
            isinstance(other, SignalState) and
            self.intersection == other.intersection and
            self.phase == other.phase and
            abs(self.elapsed - other.elapsed) <= self._EPS and
            self.pending_target == other.pending_target)

    def __hash__(self):
        return hash((self.intersection, self.phase, round(self.elapsed, 6)))

    def __repr__(self):
        return 'SignalState({:d}, {:s}, {:g})'.format(
            self.intersection, self.phase.value, self.elapsed)


def advance_phase(sig, action, dt=1.0):
    """Return the result of ``sig.advance(action, dt)``."""
    return sig.advance(action, dt)
