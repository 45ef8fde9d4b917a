from ..errors import InvalidArgumentError


class SimConfig:
    """The parameters of the microscopic simulation.

    Public attributes:

    float dt - The duration of one simulation step, in seconds. One
        step is also one decision step of the signal controllers.
    float v_max - The speed limit, in m/s.
    float min_gap - The minimum bumper-to-bumper gap a vehicle keeps to
        its leader, in meters.
    float max_decel - The maximum deceleration, in m/s^2.
    float max_accel - The maximum acceleration, in m/s^2.
    float comfort_decel - The deceleration a driver accepts when deciding
        to stop at a yellow light, in m/s^2.
    float vehicle_length - The length of a vehicle, in meters.
    float inflow_rate - The rate at which vehicles enter on each inflow
        lane, in vehicles per hour.
    float depart_speed - The speed of a vehicle when it enters the map,
        in m/s, before applying the safe speed with respect to its
        leader.
    int substeps - The number of physics sub-steps per step.
    int rng_seed - A salt mixed into the inflow seed of every episode.
    """

    # The names of the fields a scenario may set
    FIELDS = (
        'dt', 'v_max', 'min_gap', 'max_decel', 'max_accel', 'comfort_decel',
        'vehicle_length', 'inflow_rate', 'depart_speed', 'substeps',
        'rng_seed')

    # The fields whose defaults are published settings
    PUBLISHED_FIELDS = ('dt', 'v_max', 'min_gap', 'max_decel', 'inflow_rate')

    def __init__(
            self, dt=1.0, v_max=60.0, min_gap=2.5, max_decel=7.5,
            max_accel=2.6, comfort_decel=4.5, vehicle_length=5.0,
            inflow_rate=360.0, depart_speed=0.0, substeps=1, rng_seed=0):
        for name, value in (
                ('dt', dt), ('v_max', v_max), ('min_gap', min_gap),
                ('max_decel', max_decel), ('max_accel', max_accel),
                ('comfort_decel', comfort_decel),
                ('vehicle_length', vehicle_length),
                ('inflow_rate', inflow_rate)):
            if not value > 0:
                raise InvalidArgumentError(
                    '{:s} must be positive'.format(name), name)
        if comfort_decel > max_decel:
            raise InvalidArgumentError(
                'comfort_decel may not exceed max_decel', 'comfort_decel')
        if not 0 <= depart_speed <= v_max:
            raise InvalidArgumentError(
                'depart_speed must be between 0 and v_max', 'depart_speed')
        if not isinstance(substeps, int) or substeps < 1:
            raise InvalidArgumentError(
                'substeps must be a positive integer', 'substeps')
        if (not isinstance(rng_seed, int) or isinstance(rng_seed, bool) or
                rng_seed < 0):
            raise InvalidArgumentError(
                'rng_seed must be a non-negative integer', 'rng_seed')
        if inflow_rate * dt > 3600:
            raise InvalidArgumentError(
                'inflow_rate * dt may not exceed one vehicle per step',
                'inflow_rate')
        self.dt = float(dt)
        self.v_max = float(v_max)
        self.min_gap = float(min_gap)
        self.max_decel = float(max_decel)
        self.max_accel = float(max_accel)
        self.comfort_decel = float(comfort_decel)
        self.vehicle_length = float(vehicle_length)
        self.inflow_rate = float(inflow_rate)
        self.depart_speed = float(depart_speed)
        self.substeps = substeps
        self.rng_seed = rng_seed

    @property
    def spawn_probability(self):
        """The probability that an inflow lane spawns a vehicle in a step."""
        return self.inflow_rate * self.dt / 3600.0

    def to_json(self):
        return {name: getattr(self, name) for name in SimConfig.FIELDS}
