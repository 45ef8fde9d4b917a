class GridSignalError(Exception):
    """Base class for the errors this library raises deliberately."""
    pass


class InvalidArgumentError(GridSignalError, ValueError):
    """Indicates that an argument or configuration value is out of range.

    Public attributes:

    str field - The name of the offending field, if known. ``load_scenario``
        uses this to report the dotted path of a bad scenario value.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class NotFoundError(GridSignalError, KeyError):
    """Indicates a reference to an intersection or lane that doesn't exist."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class SimulationFault(GridSignalError):
    """Indicates that the vehicle dynamics broke one of their invariants.

    This always indicates a bug in the dynamics, not bad input.
    """
    pass


class NumericFault(GridSignalError):
    """Indicates a non-finite value in a Q estimate, target or gradient."""
    pass


class CheckpointError(GridSignalError):
    """Indicates a checkpoint file we are unable to load."""
    pass


class ConfigError(GridSignalError):
    """Indicates an invalid scenario file.

    The message starts with the dotted path of the offending field, e.g.
    ``reward.w1_central``, when there is one.
    """
    pass


class EmptyBufferError(GridSignalError):
    """Indicates an attempt to sample from an empty replay buffer."""
    pass


class VerificationError(GridSignalError):
    """Indicates that a verification check exceeded its tolerance."""
    pass
