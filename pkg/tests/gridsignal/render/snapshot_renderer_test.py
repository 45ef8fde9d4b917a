import os
import tempfile
import unittest

from PIL import Image

from gridsignal.network import RoadNetwork
from gridsignal.render import SnapshotRenderer
from gridsignal.signal import Phase
from gridsignal.sim import SimConfig
from gridsignal.sim import WorldState
from ..sim.test_worlds import fixed_signals
from ..sim.test_worlds import place_vehicle


def _count(image, color):
    """Return the number of pixels of ``image`` with the given color."""
    return sum(1 for pixel in image.getdata() if pixel == color)


class SnapshotRendererTest(unittest.TestCase):
    """Tests the ``SnapshotRenderer`` class."""

    def setUp(self):
        self._net = RoadNetwork.build_grid(1)
        self._world = WorldState(self._net, SimConfig())

    def test_size(self):
        """Test the image size."""
        self.assertEqual((440, 440), SnapshotRenderer(self._net).size)
        net = RoadNetwork.build_grid(2)
        self.assertEqual((640, 640), SnapshotRenderer(net).size)
        self.assertEqual(
            (340, 340), SnapshotRenderer(net, scale=0.5).size)

    def test_indications(self):
        """Test that signal heads are colored by their indication."""
        renderer = SnapshotRenderer(self._net)
        green = SnapshotRenderer.INDICATION_COLORS['G']
        yellow = SnapshotRenderer.INDICATION_COLORS['y']
        red = SnapshotRenderer.INDICATION_COLORS['r']
        image = renderer.render(self._world, fixed_signals(self._net))
        self.assertEqual('RGB', image.mode)
        self.assertEqual(renderer.size, image.size)
        self.assertGreater(_count(image, green), 0)
        self.assertGreater(_count(image, red), 0)
        self.assertEqual(0, _count(image, yellow))

        image = renderer.render(
            self._world, fixed_signals(self._net, Phase.YRYR))
        self.assertGreater(_count(image, yellow), 0)
        self.assertGreater(_count(image, red), 0)
        self.assertEqual(0, _count(image, green))

    def test_vehicles(self):
        """Test drawing halting and fast vehicles."""
        renderer = SnapshotRenderer(self._net)
        signals = fixed_signals(self._net)
        halting = (220, 40, 0)
        fast = (0, 40, 220)
        image = renderer.render(self._world, signals)
        self.assertEqual(0, _count(image, halting))
        place_vehicle(self._world, self._net, 4, 100.0, 0.0)
        place_vehicle(self._world, self._net, 5, 50.0, 60.0)
        image = renderer.render(self._world, signals)
        self.assertGreater(_count(image, halting), 0)
        self.assertGreater(_count(image, fast), 0)

    def test_save(self):
        """Test writing a PNG file."""
        with tempfile.TemporaryDirectory() as dir_:
            filename = os.path.join(dir_, 'snapshot.png')
            SnapshotRenderer(self._net).save(
                self._world, fixed_signals(self._net), filename)
            with Image.open(filename) as image:
                self.assertEqual('PNG', image.format)
                self.assertEqual((440, 440), image.size)
