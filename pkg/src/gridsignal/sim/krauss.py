import math


class KraussModel:
    """The Krauss safe-speed car-following model, without driver noise.

    Speeds are computed for an explicit Euler position update, i.e. a
    vehicle with speed ``v`` after a step of length ``h`` travels
    ``v * h`` during that step. The safe speeds are the largest speeds
    from which the vehicle is still able to stop in time when braking
    with ``decel`` on every later step, with a reaction time of one
    step. With all vehicles obeying these speeds, no vehicle ever hits
    its leader and no vehicle has to brake harder than ``decel``.
    """

    # Safety margin subtracted from every gap, in meters
    _GAP_EPS = 1e-6

    def __init__(self, decel, step_length):
        """Initialize a new ``KraussModel``.

        Arguments:
            decel (float): The maximum deceleration, in m/s^2.
            step_length (float): The duration of one physics step, in
                seconds. This is also the reaction time.
        """
        self._decel = decel
        self._h = step_length

    def brake_gap(self, speed):
        """Return the distance a vehicle needs to come to a halt.

        This is the distance covered when the speed drops by
        ``decel * h`` at the start of every step until it reaches zero.
        """
        reduction = self._decel * self._h
        steps = int(speed / reduction)
        return self._h * (
            steps * speed - reduction * steps * (steps + 1) / 2.0)

    def stop_speed(self, gap):
        """Return the largest speed that allows halting within ``gap``.

        Arguments:
            gap (float): The distance to the obstacle, in meters.

        Returns:
            float: The speed, in m/s.
        """
        gap -= KraussModel._GAP_EPS
        if gap <= 0:
            return 0.0
        b = self._decel * self._h
        s = self._h
        t = self._h
        n = math.floor(
            0.5 - (
                t - 0.5 * math.sqrt(
                    s * s + 4.0 * (s * (2.0 * gap / b - t) + t * t))) / s)
        n = max(n, 0)
        covered = 0.5 * n * (n - 1) * b * s + n * b * t
        remainder = (gap - covered) / (n * s + t)
        return max(0.0, n * b + remainder)

    def follow_speed(self, gap, leader_speed):
        """Return the safe speed behind a leader.

        Arguments:
            gap (float): The bumper-to-bumper gap minus the minimum gap,
                in meters. This may be negative.
            leader_speed (float): The leader's current speed, in m/s.

        Returns:
            float: The speed, in m/s.
        """
        return self.stop_speed(gap + self.brake_gap(leader_speed))

    def can_stop(self, speed, distance, decel):
        """Return whether a vehicle can halt before a stop line.

        Arguments:
            speed (float): The current speed, in m/s.
            distance (float): The distance to the stop line, in meters.
            decel (float): The largest deceleration the driver is
                willing to use, in m/s^2.
        """
        return self.stop_speed(distance) >= speed - decel * self._h - 1e-9
