import csv
import os
import tempfile
import unittest

from gridsignal.network import RoadNetwork
from gridsignal.sim import MetricsLog
from gridsignal.sim import MetricsRecord
from gridsignal.sim import Microsim
from gridsignal.sim import SignalLog
from gridsignal.sim import SimConfig
from gridsignal.sim import TrajectoryLog
from gridsignal.sim import WorldState
from .test_worlds import fixed_signals
from .test_worlds import place_vehicle


class TraceWriterTest(unittest.TestCase):
    """Tests the CSV trace logs."""

    def setUp(self):
        self._directory = tempfile.TemporaryDirectory()
        self._net = RoadNetwork.build_grid(1)
        self._world = WorldState(self._net, SimConfig())

    def tearDown(self):
        self._directory.cleanup()

    def _read(self, name):
        with open(os.path.join(self._directory.name, name)) as file:
            return list(csv.reader(file))

    def test_metrics_log(self):
        """Test ``MetricsLog``."""
        filename = os.path.join(self._directory.name, 'metrics.csv')
        with MetricsLog(filename) as log:
            log.write(Microsim.snapshot_metrics(self._world, self._net))
            place_vehicle(self._world, self._net, 4, 100.0, 10.0)
            log.write(Microsim.snapshot_metrics(self._world, self._net))
        rows = self._read('metrics.csv')
        self.assertEqual(list(MetricsRecord.HEADER), rows[0])
        self.assertEqual(3, len(rows))
        self.assertEqual('', rows[1][5])
        self.assertEqual('1', rows[2][1])
        self.assertEqual(10.0, float(rows[2][5]))

    def test_trajectory_log(self):
        """Test ``TrajectoryLog``."""
        place_vehicle(self._world, self._net, 4, 100.0, 0.0)
        Microsim.step_vehicles(
            self._world, self._net, fixed_signals(self._net),
            self._world.config)
        filename = os.path.join(self._directory.name, 'trajectory.csv')
        with TrajectoryLog(filename) as log:
            log.write(self._world)
        rows = self._read('trajectory.csv')
        self.assertEqual(
            ['step', 'vehicle', 'lane', 'position', 'speed'], rows[0])
        self.assertEqual(['1', '0', '4'], rows[1][:3])
        self.assertAlmostEqual(102.6, float(rows[1][3]))
        self.assertAlmostEqual(2.6, float(rows[1][4]))

    def test_signal_log(self):
        """Test ``SignalLog``."""
        filename = os.path.join(self._directory.name, 'signals.csv')
        signals = fixed_signals(RoadNetwork.build_grid(2))
        with SignalLog(filename) as log:
            log.write(0, signals)
            log.write(1, [signal.advance(0) for signal in signals])
        rows = self._read('signals.csv')
        self.assertEqual(
            ['step', 'intersection', 'phase', 'elapsed'], rows[0])
        self.assertEqual(9, len(rows))
        self.assertEqual(['0', '0', 'GrGr', '0.0'], rows[1])
        self.assertEqual(['1', '3', 'GrGr', '1.0'], rows[8])
