import math
import os
import unittest

import numpy as np

from gridsignal.errors import SimulationFault
from gridsignal.network import RoadNetwork
from gridsignal.signal import Phase
from gridsignal.sim import LaneObservation
from gridsignal.sim import Microsim
from gridsignal.sim import SimConfig
from gridsignal.sim import WorldState
from .test_worlds import fixed_signals
from .test_worlds import place_vehicle
from .test_worlds import random_run

LONG_TESTS = bool(os.environ.get('GRIDSIGNAL_LONG_TESTS'))

# Inflow lanes of a single intersection, by direction of travel
NORTHBOUND = 4
EASTBOUND = 5
SOUTHBOUND = 6
WESTBOUND = 7


class MicrosimTest(unittest.TestCase):
    """Tests the ``Microsim`` class."""

    def setUp(self):
        self._net = RoadNetwork.build_grid(1)
        self._config = SimConfig()
        self._world = WorldState(self._net, self._config)

    def test_inject_inflow_rate(self):
        """Test the spawn frequency of ``Microsim.inject_inflow``."""
        self.assertAlmostEqual(0.1, self._config.spawn_probability)
        rng = np.random.default_rng(3)
        spawned = 0
        for _ in range(2000):
            world = WorldState(self._net, self._config)
            spawned += Microsim.inject_inflow(
                world, self._net, self._config, rng)
            self.assertTrue(world.is_conserved())
        self.assertLess(abs(spawned - 800), 100)

    def test_inject_inflow_route(self):
        """Test the vehicles ``Microsim.inject_inflow`` creates."""
        config = SimConfig(inflow_rate=3600)
        rng = np.random.default_rng(0)
        self.assertEqual(
            4, Microsim.inject_inflow(self._world, self._net, config, rng))
        self.assertEqual(4, self._world.entered)
        for lane_id in self._net.inflow_edges:
            vehicle = self._world.last_vehicle(lane_id)
            self.assertEqual(self._net.route(lane_id), vehicle.route)
            self.assertEqual(lane_id, vehicle.lane)
            self.assertEqual(config.vehicle_length, vehicle.position)
            self.assertEqual(0, vehicle.speed)

    def test_inject_inflow_blocked(self):
        """Test that ``Microsim.inject_inflow`` skips occupied entries."""
        config = SimConfig(inflow_rate=3600)
        for lane_id in self._net.inflow_edges:
            place_vehicle(self._world, self._net, lane_id, 5.0, 0.0)
        rng = np.random.default_rng(0)
        self.assertEqual(
            0, Microsim.inject_inflow(self._world, self._net, config, rng))
        self.assertEqual(4, len(self._world.vehicles))

    def test_free_road(self):
        """Test acceleration from standstill on a free road."""
        vehicle = place_vehicle(
            self._world, self._net, NORTHBOUND, 50.0, 0.0)
        Microsim.step_vehicles(
            self._world, self._net, fixed_signals(self._net), self._config)
        self.assertAlmostEqual(2.6, vehicle.speed)
        self.assertAlmostEqual(52.6, vehicle.position)
        self.assertEqual(1, self._world.step)

    def test_stationary_leader(self):
        """Test a follower standing ``min_gap`` behind a stopped leader."""
        leader = place_vehicle(
            self._world, self._net, WESTBOUND, 200.0, 0.0)
        follower = place_vehicle(
            self._world, self._net, WESTBOUND, 192.5, 0.0)
        Microsim.step_vehicles(
            self._world, self._net, fixed_signals(self._net), self._config)
        self.assertEqual(0, leader.speed)
        self.assertEqual(0, follower.speed)
        self.assertEqual(192.5, follower.position)

    def test_red_light(self):
        """Test that a vehicle halts before a red light."""
        vehicle = place_vehicle(
            self._world, self._net, WESTBOUND, 100.0, 15.0)
        signals = fixed_signals(self._net)
        self.assertEqual('r', signals[0].indication(1))
        for _ in range(40):
            speed = vehicle.speed
            Microsim.step_vehicles(
                self._world, self._net, signals, self._config)
            self.assertLessEqual(
                speed - vehicle.speed, self._config.max_decel + 1e-9)
            self.assertEqual(WESTBOUND, vehicle.lane)
            self.assertLessEqual(vehicle.position, 200)
        self.assertLess(vehicle.speed, LaneObservation.HALTING_SPEED)
        self.assertGreater(vehicle.position, 195)
        obs = Microsim.observe_lane(self._world, self._net, WESTBOUND)
        self.assertEqual(1, obs.halting)

        # Once the light turns green, the vehicle proceeds
        signals = fixed_signals(self._net, Phase.RGRG)
        for _ in range(3):
            Microsim.step_vehicles(
                self._world, self._net, signals, self._config)
        self.assertEqual(self._net.route(WESTBOUND)[1], vehicle.lane)

    def test_red_light_too_close(self):
        """Test that a vehicle unable to stop proceeds through a red light.
        """
        vehicle = place_vehicle(
            self._world, self._net, WESTBOUND, 195.0, 30.0)
        Microsim.step_vehicles(
            self._world, self._net, fixed_signals(self._net), self._config)
        self.assertEqual(self._net.route(WESTBOUND)[1], vehicle.lane)

    def test_yellow_light(self):
        """Test the dilemma zone rule at a yellow light."""
        # 8.75 m/s is the largest speed that halts within 10 m, so a
        # driver at 15 m/s needs 6.25 m/s^2 and proceeds
        proceeding = place_vehicle(
            self._world, self._net, NORTHBOUND, 190.0, 15.0)
        stopping = place_vehicle(
            self._world, self._net, SOUTHBOUND, 190.0, 12.0)
        signals = fixed_signals(self._net, Phase.YRYR)
        self.assertEqual('y', signals[0].indication(0))
        self.assertEqual('y', signals[0].indication(2))
        Microsim.step_vehicles(
            self._world, self._net, signals, self._config)
        self.assertEqual(self._net.route(NORTHBOUND)[1], proceeding.lane)
        self.assertEqual(SOUTHBOUND, stopping.lane)
        self.assertLessEqual(stopping.position, 200)

    def test_crossing_and_departure(self):
        """Test moving to the next lane and leaving the map."""
        vehicle = place_vehicle(
            self._world, self._net, NORTHBOUND, 199.0, 10.0)
        signals = fixed_signals(self._net)
        Microsim.step_vehicles(self._world, self._net, signals, self._config)
        outflow = self._net.route(NORTHBOUND)[1]
        self.assertEqual(outflow, vehicle.lane)
        self.assertAlmostEqual(11.6, vehicle.position)
        self.assertEqual([vehicle.id], self._world.lane_vehicles[outflow])
        self.assertEqual([], self._world.lane_vehicles[NORTHBOUND])
        for _ in range(30):
            Microsim.step_vehicles(
                self._world, self._net, signals, self._config)
        self.assertEqual({}, self._world.vehicles)
        self.assertEqual(1, self._world.departed)
        self.assertTrue(self._world.is_conserved())

    def test_overlap_fault(self):
        """Test that ``Microsim.step_vehicles`` detects overlaps."""
        place_vehicle(self._world, self._net, NORTHBOUND, 100.0, 0.0)
        place_vehicle(self._world, self._net, NORTHBOUND, 98.0, 0.0)
        with self.assertRaises(SimulationFault):
            Microsim.step_vehicles(
                self._world, self._net, fixed_signals(self._net),
                self._config)

    def test_substeps(self):
        """Test ``Microsim.step_vehicles`` with physics sub-steps."""
        config = SimConfig(substeps=10)
        world = WorldState(self._net, config)
        vehicle = place_vehicle(world, self._net, NORTHBOUND, 50.0, 0.0)
        Microsim.step_vehicles(
            world, self._net, fixed_signals(self._net), config)
        self.assertAlmostEqual(2.6, vehicle.speed)
        self.assertAlmostEqual(51.43, vehicle.position)
        self.assertEqual(1, world.step)

    def test_observe_lane(self):
        """Test ``Microsim.observe_lane``."""
        for position, speed in ((150.0, 0.05), (140.0, 0.2), (130.0, 0.0)):
            place_vehicle(self._world, self._net, NORTHBOUND, position, speed)
        obs = Microsim.observe_lane(self._world, self._net, NORTHBOUND)
        self.assertEqual(2, obs.halting)
        self.assertEqual(3, obs.vehicles)
        self.assertEqual(3, obs.queued)
        self.assertAlmostEqual(75, obs.queue_length)
        self.assertAlmostEqual(60 - 0.25 / 3, obs.speed_lag)
        self.assertAlmostEqual(50 / 0.05, obs.approach_time)

        place_vehicle(self._world, self._net, EASTBOUND, 120.0, 10.0)
        place_vehicle(self._world, self._net, EASTBOUND, 100.0, 20.0)
        obs = Microsim.observe_lane(self._world, self._net, EASTBOUND)
        self.assertEqual(0, obs.halting)
        self.assertAlmostEqual(45, obs.speed_lag)
        self.assertEqual(0, obs.queue_length)
        self.assertEqual(0, obs.queued)

    def test_observe_empty_lane(self):
        """Test ``Microsim.observe_lane`` on an empty lane."""
        obs = Microsim.observe_lane(self._world, self._net, WESTBOUND)
        self.assertEqual(0, obs.halting)
        self.assertEqual(0, obs.speed_lag)
        self.assertEqual(0, obs.queue_length)
        self.assertEqual(math.inf, obs.approach_time)
        observations = Microsim.observe_lanes(self._world, self._net)
        self.assertEqual(
            list(range(self._net.num_lanes)),
            [obs.lane for obs in observations])

    def test_queue_stops_at_moving_vehicle(self):
        """Test that a queue ends at the first vehicle that is not slow."""
        first = place_vehicle(self._world, self._net, NORTHBOUND, 199.0, 0.0)
        second = place_vehicle(
            self._world, self._net, NORTHBOUND, 190.0, 1.0)
        place_vehicle(self._world, self._net, NORTHBOUND, 150.0, 10.0)
        place_vehicle(self._world, self._net, NORTHBOUND, 100.0, 0.0)
        first.waiting_time = 6.0
        second.waiting_time = 0.0
        obs = Microsim.observe_lane(self._world, self._net, NORTHBOUND)
        self.assertEqual(2, obs.queued)
        self.assertAlmostEqual(15, obs.queue_length)
        self.assertAlmostEqual(3, obs.queue_wait)
        self.assertEqual(2, obs.halting)

    def test_snapshot_metrics(self):
        """Test ``Microsim.snapshot_metrics``."""
        record = Microsim.snapshot_metrics(self._world, self._net)
        self.assertEqual(0, record.vehicles)
        self.assertEqual(0, record.halting)
        self.assertEqual(0, record.queue_time)
        self.assertEqual(0, record.queue_length)
        self.assertIsNone(record.speed)
        self.assertEqual('', record.to_row()[5])

        first = place_vehicle(self._world, self._net, NORTHBOUND, 195.0, 0.0)
        second = place_vehicle(
            self._world, self._net, NORTHBOUND, 185.0, 0.0)
        place_vehicle(self._world, self._net, EASTBOUND, 100.0, 12.0)
        first.waiting_time = first.accumulated_waiting = 4.0
        second.waiting_time = second.accumulated_waiting = 2.0
        record = Microsim.snapshot_metrics(self._world, self._net)
        self.assertEqual(3, record.vehicles)
        self.assertEqual(2, record.halting)
        self.assertAlmostEqual(3, record.queue_time)
        self.assertAlmostEqual(20, record.queue_length)
        self.assertAlmostEqual(4, record.speed)
        self.assertAlmostEqual(6, record.cumulative_waiting)
        self.assertEqual(3, record.entered)
        self.assertEqual(0, record.departed)

    def test_snapshot_metrics_free_flow(self):
        """Test ``Microsim.snapshot_metrics`` with every vehicle at v_max."""
        place_vehicle(self._world, self._net, NORTHBOUND, 100.0, 60.0)
        place_vehicle(self._world, self._net, EASTBOUND, 50.0, 60.0)
        record = Microsim.snapshot_metrics(self._world, self._net)
        self.assertEqual(0, record.halting)
        self.assertEqual(0, record.queue_length)
        self.assertEqual(0, record.queue_time)
        self.assertAlmostEqual(60, record.speed)

    def _check_run(self, n, steps, seed):
        """Check the invariants of a simulation with random actions."""
        net = RoadNetwork.build_grid(n)
        config = SimConfig()
        counts = {'steps': 0}

        def check(world, signals, speeds):
            counts['steps'] += 1
            self.assertTrue(world.is_conserved())
            for signal in signals:
                phase = signal.phase.value
                self.assertFalse(
                    'G' in phase[0::2] and 'G' in phase[1::2])
            for lane in net.lanes:
                previous = None
                for vehicle_id in world.lane_vehicles[lane.id]:
                    vehicle = world.vehicles[vehicle_id]
                    self.assertEqual(lane.id, vehicle.lane)
                    self.assertGreaterEqual(vehicle.position, 0)
                    self.assertLessEqual(vehicle.position, lane.length)
                    self.assertGreaterEqual(vehicle.speed, 0)
                    self.assertLessEqual(vehicle.speed, config.v_max)
                    if previous is not None:
                        self.assertLessEqual(
                            vehicle.position + config.vehicle_length,
                            previous.position + 1e-9)
                    previous = vehicle
            for vehicle_id, speed in speeds.items():
                vehicle = world.vehicles.get(vehicle_id)
                if vehicle is not None:
                    self.assertLessEqual(
                        speed - vehicle.speed,
                        config.max_decel * config.dt + 1e-6)

        world = random_run(net, config, steps, seed, check)
        self.assertEqual(steps, counts['steps'])
        self.assertGreater(world.entered, 0)
        self.assertGreater(world.departed, 0)

    def test_random_actions(self):
        """Test the safety and conservation invariants under random actions.
        """
        self._check_run(2, 400, 1)

    @unittest.skipUnless(LONG_TESTS, 'GRIDSIGNAL_LONG_TESTS is not set')
    def test_random_actions_long(self):
        """Test the invariants over long runs with random actions."""
        for n in (1, 2, 5):
            for seed in range(20):
                with self.subTest(n=n, seed=seed):
                    self._check_run(n, 10000, seed)

    def test_determinism(self):
        """Test that equal seeds give identical trajectories."""
        net = RoadNetwork.build_grid(2)
        config = SimConfig()
        worlds = [random_run(net, config, 200, 7) for _ in range(2)]
        for world in worlds[1:]:
            self.assertEqual(worlds[0].lane_vehicles, world.lane_vehicles)
            for id_, vehicle in world.vehicles.items():
                other = worlds[0].vehicles[id_]
                self.assertEqual(other.position, vehicle.position)
                self.assertEqual(other.speed, vehicle.speed)
        different = random_run(net, config, 200, 8)
        self.assertNotEqual(
            worlds[0].lane_vehicles, different.lane_vehicles)

    @unittest.skipUnless(LONG_TESTS, 'GRIDSIGNAL_LONG_TESTS is not set')
    def test_hourly_inflow(self):
        """Test that about 7200 vehicles enter a 5 x 5 grid in an hour."""
        world = random_run(
            RoadNetwork.build_grid(5), SimConfig(), 3600, 0)
        self.assertLess(abs(world.entered - 7200), 360)
