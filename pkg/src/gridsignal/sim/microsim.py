import logging
import math

from ..errors import SimulationFault
from .krauss import KraussModel
from .observation import LaneObservation
from .observation import MetricsRecord
from .vehicle import Vehicle

logger = logging.getLogger(__name__)


class Microsim:
    """Provides the operations of the microscopic traffic simulation.

    The methods operate on an explicit ``WorldState`` so that any number
    of independent simulations can run side by side. The per-step
    sequence is ``inject_inflow``, then ``step_vehicles``, then
    ``observe_lanes`` and ``snapshot_metrics``.
    """

    # Tolerance for the no-collision check, in meters
    _GAP_TOLERANCE = 1e-9

    @staticmethod
    def inject_inflow(world, net, config, rng):
        """Spawn new vehicles on the inflow lanes.

        Each inflow lane spawns a vehicle with probability
        ``config.spawn_probability``. A spawn is dropped if the start of
        the lane lacks ``min_gap + vehicle_length`` meters of free space.
        A new vehicle is placed with its rear bumper at the start of the
        lane, on the straight route that starts on the lane.

        Arguments:
            world (WorldState): The simulation state.
            net (RoadNetwork): The road network.
            config (SimConfig): The simulation parameters.
            rng (numpy.random.Generator): The random number generator.
                We draw exactly one number per inflow lane.

        Returns:
            int: The number of vehicles spawned.
        """
        draws = rng.random(len(net.inflow_edges))
        model = KraussModel(config.max_decel, config.dt / config.substeps)
        spawned = 0
        for lane_id, draw in zip(net.inflow_edges, draws):
            if draw >= config.spawn_probability:
                continue
            position = config.vehicle_length
            speed = config.depart_speed
            leader = world.last_vehicle(lane_id)
            if leader is not None:
                rear = leader.position - config.vehicle_length
                if rear < config.vehicle_length + config.min_gap:
                    logger.debug('Blocked spawn on lane %d', lane_id)
                    continue
                speed = min(
                    speed,
                    model.follow_speed(
                        rear - position - config.min_gap, leader.speed))
            vehicle = Vehicle(
                world.new_vehicle_id(), net.route(lane_id), position, speed,
                world.step)
            world.vehicles[vehicle.id] = vehicle
            world.lane_vehicles[lane_id].append(vehicle.id)
            world.entered += 1
            spawned += 1
        return spawned

    @staticmethod
    def _stop_line_blocks(lane, signals, speed, distance, model, config):
        """Return whether a vehicle must treat a stop line as an obstacle.

        Red lights block unless the vehicle is unable to halt before
        the line with ``max_decel``; yellow lights block unless it is
        unable to halt with ``comfort_decel``.
        """
        if lane.is_outflow:
            return False
        indication = signals[lane.downstream].indication(lane.signal_index)
        if indication == 'G':
            return False
        elif indication == 'y':
            decel = config.comfort_decel
        else:
            decel = config.max_decel
        if model.can_stop(speed, distance, decel):
            return True
        logger.debug(
            'Vehicle proceeds through %s light on lane %d', indication,
            lane.id)
        return False

    @staticmethod
    def _next_speed(world, net, signals, config, model, vehicle, index, h):
        """Return the speed of a vehicle for the next physics step.

        Arguments:
            index (int): The index of the vehicle in its lane's list.
            h (float): The duration of the physics step.
        """
        speed = vehicle.speed
        limit = min(config.v_max, speed + config.max_accel * h)
        v_cap = limit
        lookahead = (
            v_cap * h + model.brake_gap(v_cap) + config.min_gap +
            config.vehicle_length)

        lane = net.lanes[vehicle.lane]
        lane_ids = world.lane_vehicles[lane.id]
        if index > 0:
            leader = world.vehicles[lane_ids[index - 1]]
            gap = (
                leader.position - config.vehicle_length - vehicle.position -
                config.min_gap)
            limit = min(limit, model.follow_speed(gap, leader.speed))
            has_leader = True
        else:
            has_leader = False

        distance = lane.length - vehicle.position
        while True:
            if Microsim._stop_line_blocks(
                    lane, signals, speed, distance, model, config):
                return max(0.0, min(limit, model.stop_speed(distance)))
            if has_leader or lane.is_outflow or distance > lookahead:
                return max(0.0, limit)
            lane = net.lanes[lane.next_lane]
            leader = world.last_vehicle(lane.id)
            if leader is not None:
                gap = (
                    distance + leader.position - config.vehicle_length -
                    config.min_gap)
                limit = min(limit, model.follow_speed(gap, leader.speed))
                has_leader = True
            distance += lane.length

    @staticmethod
    def _physics_step(world, net, signals, config, model, h):
        """Advance the vehicles by one physics step of ``h`` seconds."""
        speeds = {}
        for lane_ids in world.lane_vehicles:
            for index, vehicle_id in enumerate(lane_ids):
                vehicle = world.vehicles[vehicle_id]
                speeds[vehicle_id] = Microsim._next_speed(
                    world, net, signals, config, model, vehicle, index, h)

        new_lanes = [[] for _ in range(net.num_lanes)]
        for lane_ids in world.lane_vehicles:
            for vehicle_id in lane_ids:
                vehicle = world.vehicles[vehicle_id]
                vehicle.speed = speeds[vehicle_id]
                if vehicle.speed < LaneObservation.HALTING_SPEED:
                    vehicle.waiting_time += h
                    vehicle.accumulated_waiting += h
                else:
                    vehicle.waiting_time = 0.0
                vehicle.position += vehicle.speed * h
                departed = False
                while vehicle.position > net.lanes[vehicle.lane].length:
                    lane = net.lanes[vehicle.lane]
                    if lane.is_outflow:
                        departed = True
                        break
                    vehicle.position -= lane.length
                    vehicle.route_index += 1
                if departed:
                    del world.vehicles[vehicle_id]
                    world.departed += 1
                else:
                    new_lanes[vehicle.lane].append(vehicle)

        for lane_id, vehicles in enumerate(new_lanes):
            vehicles.sort(key=lambda vehicle: -vehicle.position)
            world.lane_vehicles[lane_id] = [
                vehicle.id for vehicle in vehicles]
        Microsim._check_gaps(world, net, config)

    @staticmethod
    def _check_gaps(world, net, config):
        """Raise a ``SimulationFault`` if two vehicles overlap."""
        length = config.vehicle_length
        for lane in net.lanes:
            lane_ids = world.lane_vehicles[lane.id]
            for leader_id, follower_id in zip(lane_ids, lane_ids[1:]):
                gap = (
                    world.vehicles[leader_id].position - length -
                    world.vehicles[follower_id].position)
                if gap < -Microsim._GAP_TOLERANCE:
                    raise SimulationFault(
                        'Vehicles {:d} and {:d} overlap on lane {:d} (gap '
                        '{:g} m) at step {:d}'.format(
                            leader_id, follower_id, lane.id, gap,
                            world.step))
            if lane_ids and not lane.is_outflow:
                leader = world.last_vehicle(lane.next_lane)
                if leader is not None:
                    follower = world.vehicles[lane_ids[0]]
                    gap = (
                        lane.length - follower.position + leader.position -
                        length)
                    if gap < -Microsim._GAP_TOLERANCE:
                        raise SimulationFault(
                            'Vehicles {:d} and {:d} overlap across the stop '
                            'line of lane {:d} (gap {:g} m) at step '
                            '{:d}'.format(
                                leader.id, follower.id, lane.id, gap,
                                world.step))

    @staticmethod
    def step_vehicles(world, net, signals, config):
        """Advance all vehicles by one step.

        Every vehicle takes the largest speed that respects its
        acceleration limit, the speed limit and the Krauss safe speeds
        with respect to its leader and to any stop line it has to stop
        at. The step is split into ``config.substeps`` physics steps.

        Arguments:
            world (WorldState): The simulation state. This is modified.
            net (RoadNetwork): The road network.
            signals (list<SignalState>): The signal states, indexed by
                intersection ID.
            config (SimConfig): The simulation parameters.

        Returns:
            WorldState: ``world``.

        Raises:
            SimulationFault: If two vehicles overlap afterwards.
        """
        h = config.dt / config.substeps
        model = KraussModel(config.max_decel, h)
        for _ in range(config.substeps):
            Microsim._physics_step(world, net, signals, config, model, h)
        world.step += 1
        return world

    @staticmethod
    def observe_lane(world, net, lane_id):
        """Return the ``LaneObservation`` of one lane."""
        config = world.config
        lane = net.lanes[lane_id]
        lane_ids = world.lane_vehicles[lane_id]
        if not lane_ids:
            return LaneObservation(lane_id)
        vehicles = [world.vehicles[id_] for id_ in lane_ids]
        halting = 0
        lag = 0.0
        for vehicle in vehicles:
            if vehicle.speed < LaneObservation.HALTING_SPEED:
                halting += 1
            lag += config.v_max - vehicle.speed

        queued = 0
        wait = 0.0
        for vehicle in vehicles:
            if vehicle.speed >= LaneObservation.QUEUE_SPEED:
                break
            queued += 1
            wait += vehicle.waiting_time
        if queued > 0:
            rear = vehicles[queued - 1].position - config.vehicle_length
            queue_length = min(lane.length, lane.length - rear)
            queue_wait = wait / queued
        else:
            queue_length = 0.0
            queue_wait = 0.0

        first = vehicles[0]
        distance = lane.length - first.position
        if distance <= 0:
            approach_time = 0.0
        elif first.speed > 0:
            approach_time = distance / first.speed
        else:
            approach_time = math.inf
        return LaneObservation(
            lane_id, halting, lag / len(vehicles), queue_length, queue_wait,
            len(vehicles), queued, approach_time)

    @staticmethod
    def observe_lanes(world, net):
        """Return the ``LaneObservation`` of every lane, indexed by lane ID.
        """
        return [
            Microsim.observe_lane(world, net, lane.id) for lane in net.lanes]

    @staticmethod
    def snapshot_metrics(world, net, observations=None):
        """Return the network-wide ``MetricsRecord`` of the current step.

        Arguments:
            world (WorldState): The simulation state.
            net (RoadNetwork): The road network.
            observations (list<LaneObservation>): The result of
                ``observe_lanes(world, net)``, if already computed.
        """
        if observations is None:
            observations = Microsim.observe_lanes(world, net)
        halting = sum(obs.halting for obs in observations)
        queued = sum(obs.queued for obs in observations)
        if queued > 0:
            queue_time = sum(
                obs.queue_wait * obs.queued for obs in observations) / queued
        else:
            queue_time = 0.0
        queues = [obs.queue_length for obs in observations if obs.queued > 0]
        if queues:
            queue_length = sum(queues) / len(queues)
        else:
            queue_length = 0.0
        if world.vehicles:
            speed = sum(
                vehicle.speed for vehicle in world.vehicles.values()) / len(
                    world.vehicles)
        else:
            speed = None
        cumulative_waiting = sum(
            vehicle.accumulated_waiting
            for vehicle in world.vehicles.values())
        return MetricsRecord(
            world.step, len(world.vehicles), halting, queue_time,
            queue_length, speed, cumulative_waiting, world.entered,
            world.departed)
