from ..errors import InvalidArgumentError


class CommConfig:
    """The parameters of the vehicle-to-edge message model.

    Vehicles send one status message of ``message_size`` bytes every
    ``1 / frequency`` seconds to the edge server of their area. Each
    direction's delay follows a Laplace distribution with the given mean
    and median absolute deviation, truncated at 0.

    Public attributes:

    int message_size - The size of a message, in bytes. At most one MTU.
    float frequency - The messages per vehicle and second, in
        ``[0.1, 1]``.
    float uplink_mean - The mean vehicle-to-server delay, in ms.
    float uplink_mad - The median absolute deviation of the uplink
        delay, in ms.
    float downlink_mean - The mean server-to-signal delay, in ms.
    float downlink_mad - The median absolute deviation of the downlink
        delay, in ms.
    float step_duration - The duration of a decision step, in ms. A
        message is feasible if it makes the round trip within one step.
    bool delayed_observation - Whether agents act on the observation of
        the previous step during training and evaluation.
    """

    FIELDS = (
        'message_size', 'frequency', 'uplink_mean', 'uplink_mad',
        'downlink_mean', 'downlink_mad', 'step_duration',
        'delayed_observation')

    PUBLISHED_FIELDS = (
        'message_size', 'frequency', 'uplink_mean', 'uplink_mad',
        'downlink_mean', 'downlink_mad', 'step_duration')

    # The maximum transmission unit, in bytes
    MTU = 1500

    def __init__(
            self, message_size=1500, frequency=1.0, uplink_mean=110.82,
            uplink_mad=17.68, downlink_mean=106.23, downlink_mad=0.0,
            step_duration=1000.0, delayed_observation=False):
        if (not isinstance(message_size, int) or
                not 0 < message_size <= CommConfig.MTU):
            raise InvalidArgumentError(
                'message_size must be between 1 and {:d} bytes'.format(
                    CommConfig.MTU),
                'message_size')
        if not 0.1 <= frequency <= 1:
            raise InvalidArgumentError(
                'frequency must be between 0.1 and 1 Hz', 'frequency')
        for name, value in (
                ('uplink_mean', uplink_mean), ('uplink_mad', uplink_mad),
                ('downlink_mean', downlink_mean),
                ('downlink_mad', downlink_mad)):
            if not value >= 0:
                raise InvalidArgumentError(
                    '{:s} may not be negative'.format(name), name)
        if not step_duration > 0:
            raise InvalidArgumentError(
                'step_duration must be positive', 'step_duration')
        self.message_size = message_size
        self.frequency = float(frequency)
        self.uplink_mean = float(uplink_mean)
        self.uplink_mad = float(uplink_mad)
        self.downlink_mean = float(downlink_mean)
        self.downlink_mad = float(downlink_mad)
        self.step_duration = float(step_duration)
        self.delayed_observation = bool(delayed_observation)

    def to_json(self):
        return {name: getattr(self, name) for name in CommConfig.FIELDS}
