import csv
import math
import numbers

import numpy as np

from ..errors import InvalidArgumentError


class DelaySample:
    """The per-message delays of a batch of status messages, in ms.

    Public attributes:

    int vehicles - The number of vehicles sending messages.
    numpy.ndarray uplink - The vehicle-to-server delay of each message.
    numpy.ndarray downlink - The server-to-signal delay of each message.
    """

    def __init__(self, vehicles, uplink, downlink):
        self.vehicles = vehicles
        self.uplink = uplink
        self.downlink = downlink

    @property
    def end_to_end(self):
        return self.uplink + self.downlink


class DelayStatistics:
    """Summary statistics of a set of delays, in ms.

    Public attributes:

    float mean - The mean.
    float mad - The median absolute deviation from the median.
    float p95 - The 95th percentile.
    float p99 - The 99th percentile.
    float max - The maximum.
    """

    def __init__(self, delays):
        delays = np.asarray(delays, dtype=np.float64)
        self.mean = float(np.mean(delays))
        self.mad = float(np.median(np.abs(delays - np.median(delays))))
        self.p95 = float(np.percentile(delays, 95))
        self.p99 = float(np.percentile(delays, 99))
        self.max = float(np.max(delays))

    def to_row(self, direction):
        return [direction, self.mean, self.mad, self.p95, self.p99, self.max]


class DelayReport:
    """The result of ``sample_delays``.

    Public attributes:

    DelaySample sample - The sampled delays.
    DelayStatistics uplink - The uplink statistics.
    DelayStatistics downlink - The downlink statistics.
    DelayStatistics end_to_end - The statistics of the round trips.
    float feasible_fraction - The fraction of messages whose round trip
        is shorter than one step.
    """

    # The CSV header of to_rows()
    HEADER = ('direction', 'mean', 'mad', 'p95', 'p99', 'max')

    def __init__(self, sample, step_duration):
        self.sample = sample
        end_to_end = sample.end_to_end
        self.uplink = DelayStatistics(sample.uplink)
        self.downlink = DelayStatistics(sample.downlink)
        self.end_to_end = DelayStatistics(end_to_end)
        self.feasible_fraction = float(np.mean(end_to_end < step_duration))

    def to_rows(self):
        return [
            self.uplink.to_row('uplink'),
            self.downlink.to_row('downlink'),
            self.end_to_end.to_row('end_to_end')]

    def format_table(self):
        """Return the statistics as an aligned text table."""
        lines = ['{:<12s}{:>10s}{:>10s}{:>10s}{:>10s}{:>10s}'.format(
            *DelayReport.HEADER)]
        for row in self.to_rows():
            lines.append(
                '{:<12s}{:>10.2f}{:>10.2f}{:>10.2f}{:>10.2f}{:>10.2f}'.format(
                    *row))
        lines.append('feasible fraction: {:.6f}'.format(
            self.feasible_fraction))
        return '\n'.join(lines)


def laplace_delays(mean, mad, size, rng):
    """Draw delays from a Laplace distribution truncated at 0.

    The scale is ``mad / ln 2``, for which the median absolute deviation
    of the distribution equals ``mad``. A ``mad`` of 0 yields the
    constant ``mean``.

    Arguments:
        mean (float): The location, in ms.
        mad (float): The median absolute deviation, in ms.
        size (int): The number of delays.
        rng (numpy.random.Generator): The random number generator.

    Returns:
        numpy.ndarray: The delays.
    """
    if mad == 0:
        return np.full(size, float(mean))
    return np.maximum(
        rng.laplace(loc=mean, scale=mad / math.log(2), size=size), 0.0)


def sample_delays(cfg, n_vehicles, n_steps, rng):
    """Sample the delays of every status message over a period.

    Every vehicle sends ``frequency * step_duration / 1000`` messages per
    step, rounded to the nearest whole number of messages over the whole
    period.

    Arguments:
        cfg (CommConfig): The model parameters.
        n_vehicles (int): The number of active vehicles.
        n_steps (int): The number of steps.
        rng (numpy.random.Generator): The random number generator.

    Returns:
        DelayReport: The statistics.
    """
    if not n_vehicles > 0:
        raise InvalidArgumentError(
            'The number of vehicles must be positive', 'n_vehicles')
    if not n_steps > 0:
        raise InvalidArgumentError(
            'The number of steps must be positive', 'n_steps')
    per_vehicle = max(
        1, int(round(cfg.frequency * cfg.step_duration / 1000 * n_steps)))
    count = int(n_vehicles * per_vehicle)
    uplink = laplace_delays(cfg.uplink_mean, cfg.uplink_mad, count, rng)
    downlink = laplace_delays(cfg.downlink_mean, cfg.downlink_mad, count, rng)
    return DelayReport(
        DelaySample(n_vehicles, uplink, downlink), cfg.step_duration)


def traffic_volume(cfg, n_vehicles):
    """Return the uplink load of a base station, in bytes per second."""
    return n_vehicles * cfg.frequency * cfg.message_size


def estimate_active_vehicles(log):
    """Return the mean number of vehicles on the map per step.

    Arguments:
        log (iterable): The ``MetricsRecord`` objects of a run, or the
            vehicle counts of its steps.

    Returns:
        float: The mean.

    Raises:
        InvalidArgumentError: If the log is empty.
    """
    counts = [
        record if isinstance(record, numbers.Real) else record.vehicles
        for record in log]
    if not counts:
        raise InvalidArgumentError('The log is empty', 'log')
    return float(np.mean(counts))


def read_vehicle_counts(filename):
    """Return the number of vehicles on the map at each step of a log.

    Arguments:
        filename (str): A metrics CSV file, whose ``vehicles`` column we
            return, or a trajectory CSV file, where we count the rows of
            each step from 1 to the last step. Steps without rows count
            as zero vehicles.

    Returns:
        list<int>: The counts, in step order.
    """
    with open(filename, newline='') as file:
        reader = csv.DictReader(file)
        if 'vehicles' in (reader.fieldnames or ()):
            return [int(row['vehicles']) for row in reader]
        steps = [int(row['step']) for row in reader]
    if not steps:
        return []
    return np.bincount(steps, minlength=max(steps) + 1)[1:].tolist()
