import csv

from .observation import MetricsRecord


class CsvLog:
    """A CSV file with a fixed header, written one row at a time.

    ``CsvLog`` objects are context managers. Subclasses define
    ``HEADER`` and methods that translate domain objects into rows.
    """

    HEADER = ()

    def __init__(self, filename):
        self._file = open(filename, 'w', newline='')
        self._writer = csv.writer(self._file)
        self._writer.writerow(self.HEADER)

    def write_row(self, row):
        self._writer.writerow(row)

    def close(self):
        self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()


class MetricsLog(CsvLog):
    """A CSV stream of ``MetricsRecord`` objects, one row per step."""

    HEADER = MetricsRecord.HEADER

    def write(self, record):
        self.write_row(record.to_row())


class TrajectoryLog(CsvLog):
    """A CSV trace of every vehicle's lane, position and speed per step."""

    HEADER = ('step', 'vehicle', 'lane', 'position', 'speed')

    def write(self, world):
        for vehicle in world.vehicles.values():
            self.write_row([
                world.step, vehicle.id, vehicle.lane,
                round(vehicle.position, 6), round(vehicle.speed, 6)])


class SignalLog(CsvLog):
    """A CSV trace of every signal's phase per step."""

    HEADER = ('step', 'intersection', 'phase', 'elapsed')

    def write(self, step, signals):
        for signal in signals:
            self.write_row([
                step, signal.intersection, signal.phase.value,
                signal.elapsed])
