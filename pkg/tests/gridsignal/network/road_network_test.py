import json
import os
import tempfile
import unittest

from gridsignal.errors import InvalidArgumentError
from gridsignal.errors import NotFoundError
from gridsignal.network import Centrality
from gridsignal.network import Direction
from gridsignal.network import RoadNetwork


class RoadNetworkTest(unittest.TestCase):
    """Tests the ``RoadNetwork`` class."""

    def test_counts(self):
        """Test the number of intersections and lanes of various grids."""
        for n in range(1, 7):
            net = RoadNetwork.build_grid(n)
            self.assertEqual(n * n, net.num_intersections)
            self.assertEqual(4 * n * n + 4 * n, net.num_lanes)
            self.assertEqual(4 * n, len(net.inflow_edges))
            self.assertEqual(4 * n * n, len(net.signalized_lanes()))
            outflow = [lane for lane in net.lanes if lane.is_outflow]
            self.assertEqual(4 * n, len(outflow))

    def test_single_intersection(self):
        """Test ``build_grid(1)``."""
        net = RoadNetwork.build_grid(1)
        self.assertEqual(8, net.num_lanes)
        incoming, outgoing = net.lanes_of_intersection(0)
        self.assertEqual([0, 1, 2, 3], outgoing)
        self.assertEqual(4, len(set(incoming)))
        for lane_id in incoming:
            self.assertTrue(net.lane(lane_id).is_inflow)
        for lane_id in outgoing:
            self.assertTrue(net.lane(lane_id).is_outflow)
        self.assertEqual([], net.central_intersections())
        self.assertEqual([0], net.edge_intersections())

    def test_deterministic(self):
        """Test that building a grid twice gives identical topologies."""
        self.assertEqual(
            RoadNetwork.build_grid(4).to_json(),
            RoadNetwork.build_grid(4).to_json())

    def test_incoming_partition(self):
        """Test that incoming lanes partition the signalized lanes."""
        for n in (1, 2, 5):
            net = RoadNetwork.build_grid(n)
            incoming = []
            for c in range(net.num_intersections):
                incoming.extend(net.lanes_of_intersection(c)[0])
            self.assertEqual(len(incoming), len(set(incoming)))
            self.assertEqual(
                sorted(net.signalized_lanes()), sorted(incoming))

    def test_incoming_sides(self):
        """Test that incoming lanes are listed by approach side N, E, S, W.
        """
        net = RoadNetwork.build_grid(3)
        incoming, _ = net.lanes_of_intersection(4)
        # A lane approaching from the north travels south
        self.assertEqual(Direction.SOUTH, net.lane(incoming[0]).direction)
        self.assertEqual(Direction.WEST, net.lane(incoming[1]).direction)
        self.assertEqual(Direction.NORTH, net.lane(incoming[2]).direction)
        self.assertEqual(Direction.EAST, net.lane(incoming[3]).direction)
        for side, lane_id in enumerate(incoming):
            self.assertEqual(side, net.lane(lane_id).signal_index)
            self.assertEqual(4, net.lane(lane_id).downstream)

    def test_centrality(self):
        """Test the central and edge intersections of a 5 x 5 grid."""
        net = RoadNetwork.build_grid(5)
        central = net.central_intersections()
        self.assertEqual(9, len(central))
        self.assertEqual(16, len(net.edge_intersections()))
        self.assertIn(12, central)
        self.assertNotIn(0, central)
        self.assertEqual(
            Centrality.CENTRAL, net.intersection(6).centrality)

    def test_routes(self):
        """Test that routes run straight across the grid."""
        net = RoadNetwork.build_grid(4)
        for inflow in net.inflow_edges:
            route = net.route(inflow)
            self.assertEqual(5, len(route))
            self.assertTrue(net.lane(route[0]).is_inflow)
            self.assertTrue(net.lane(route[-1]).is_outflow)
            directions = {net.lane(lane_id).direction for lane_id in route}
            self.assertEqual(1, len(directions))
            for lane_id, next_id in zip(route, route[1:]):
                self.assertEqual(next_id, net.lane(lane_id).next_lane)

    def test_errors(self):
        """Test the errors ``RoadNetwork`` raises."""
        with self.assertRaises(InvalidArgumentError):
            RoadNetwork.build_grid(0)
        with self.assertRaises(InvalidArgumentError):
            RoadNetwork.build_grid(2.5)
        with self.assertRaises(InvalidArgumentError):
            RoadNetwork.build_grid(2, block_length=0)
        net = RoadNetwork.build_grid(2)
        with self.assertRaises(NotFoundError):
            net.intersection(4)
        with self.assertRaises(NotFoundError):
            net.lane(-1)
        with self.assertRaises(NotFoundError):
            net.lanes_of_intersection(7)
        with self.assertRaises(NotFoundError):
            net.route(0)

    def test_export_json(self):
        """Test ``RoadNetwork.export_json``."""
        net = RoadNetwork.build_grid(2)
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'network.json')
            net.export_json(filename)
            with open(filename) as file:
                data = json.load(file)
        self.assertEqual(2, data['n'])
        self.assertEqual(4, len(data['nodes']))
        self.assertEqual(net.num_lanes, len(data['lanes']))
        self.assertEqual(8, len(data['routes']))
        names = {lane['from'] for lane in data['lanes']}
        self.assertIn('i0_0', names)
        self.assertTrue(any(name.startswith('b') for name in names))
