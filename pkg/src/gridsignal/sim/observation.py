import math


class LaneObservation:
    """What the detectors of one lane report at the end of a step.

    Public attributes:

    int lane - The lane ID ``m``.
    int halting - The number of halting vehicles ``H_m``, i.e. vehicles
        slower than ``HALTING_SPEED``.
    float speed_lag - The mean of ``v_max - speed`` over the vehicles on
        the lane, ``dV_m``. This is 0 for an empty lane.
    float queue_length - The distance from the stop line to the rear
        bumper of the last vehicle of the queue, in meters. The queue is
        the longest run of vehicles slower than ``QUEUE_SPEED``, starting
        with the vehicle closest to the stop line.
    float queue_wait - The mean waiting time of the queued vehicles, in
        seconds.
    int vehicles - The number of vehicles on the lane.
    int queued - The number of vehicles in the queue.
    float approach_time - The number of seconds until the first vehicle
        reaches the stop line at its current speed, or ``math.inf`` if
        the lane is empty.
    """

    # Vehicles slower than this, in m/s, are halting
    HALTING_SPEED = 0.1

    # Vehicles slower than this, in m/s (5 km/h), belong to a queue
    QUEUE_SPEED = 5.0 / 3.6

    def __init__(
            self, lane, halting=0, speed_lag=0.0, queue_length=0.0,
            queue_wait=0.0, vehicles=0, queued=0, approach_time=math.inf):
        self.lane = lane
        self.halting = halting
        self.speed_lag = speed_lag
        self.queue_length = queue_length
        self.queue_wait = queue_wait
        self.vehicles = vehicles
        self.queued = queued
        self.approach_time = approach_time

    def __repr__(self):
        return (
            'LaneObservation({:d}, H={:d}, dV={:.3f}, queue={:.2f})'.format(
                self.lane, self.halting, self.speed_lag, self.queue_length))


class MetricsRecord:
    """Network-wide traffic metrics for one step.

    Public attributes:

    int step - The step index.
    int vehicles - The number of vehicles on the map.
    int halting - The number of halting vehicles.
    float queue_time - The mean waiting time of the queued vehicles, in
        seconds.
    float queue_length - The mean length of the non-empty queues, in
        meters.
    float speed - The mean speed of the vehicles, in m/s, or ``None`` if
        the map is empty.
    float cumulative_waiting - The total halting time accumulated by the
        vehicles on the map, in seconds.
    int entered - The number of vehicles that have entered so far.
    int departed - The number of vehicles that have left so far.
    """

    # The CSV header, in column order
    HEADER = (
        'step', 'vehicles', 'halting', 'queue_time', 'queue_length', 'speed',
        'cumulative_waiting', 'entered', 'departed')

    def __init__(
            self, step, vehicles, halting, queue_time, queue_length, speed,
            cumulative_waiting, entered, departed):
        self.step = step
        self.vehicles = vehicles
        self.halting = halting
        self.queue_time = queue_time
        self.queue_length = queue_length
        self.speed = speed
        self.cumulative_waiting = cumulative_waiting
        self.entered = entered
        self.departed = departed

    def to_row(self):
        """Return the record as a list of CSV cells, in ``HEADER`` order."""
        row = []
        for name in MetricsRecord.HEADER:
            value = getattr(self, name)
            row.append('' if value is None else value)
        return row
