import json
import numbers

from ..errors import InvalidArgumentError
from ..errors import NotFoundError
from .direction import Direction
from .intersection import Centrality
from .intersection import Intersection
from .lane import Lane


class RoadNetwork:
    """An n x n grid of signalized four-way intersections.

    Every intersection has one incoming and one outgoing lane per
    cardinal direction. Lanes that cross the boundary of the grid are
    inflow lanes (entering) or outflow lanes (leaving). Vehicles only
    travel straight, so the route of a vehicle is determined by the
    inflow lane it enters on.

    A ``RoadNetwork`` is immutable after construction, so it may be
    shared by any number of simulations.

    Public attributes:

    int n - The number of intersections per side.
    float block_length - The distance between adjacent intersections,
        in meters. Inflow and outflow lanes have the same length.
    tuple<Intersection> intersections - The intersections, indexed by
        ID.
    tuple<Lane> lanes - The lanes, indexed by ID.
    tuple<int> inflow_edges - The IDs of the inflow lanes.
    """

    # Private attributes:
    #
    # dict<int, tuple<int>> _routes - A map from the ID of each inflow lane
    #     to the IDs of the lanes of the straight route starting on it, ending
    #     with an outflow lane.
    # tuple<int> _signalized_lanes - The IDs of the lanes that have a signal
    #     head, in increasing order.

    def __init__(self, n, block_length, intersections, lanes, routes):
        """Private initializer. Use ``build_grid`` instead."""
        self.n = n
        self.block_length = block_length
        self.intersections = tuple(intersections)
        self.lanes = tuple(lanes)
        self._routes = routes
        self.inflow_edges = tuple(sorted(routes.keys()))
        self._signalized_lanes = tuple(
            lane.id for lane in self.lanes if lane.is_signalized)

    @staticmethod
    def build_grid(n, block_length=200.0):
        """Return the n x n grid network.

        This is a pure function of its arguments. Lane IDs are assigned
        in a fixed order: first the outgoing lanes of each intersection
        in order of intersection ID and direction N, E, S, W, then the
        inflow lanes in the same order of their first intersection and
        direction of travel.

        Arguments:
            n (int): The number of intersections per side.
            block_length (float): The distance between adjacent
                intersections, in meters.

        Returns:
            RoadNetwork: The network.

        Raises:
            InvalidArgumentError: If ``n`` is not a positive integer or
                ``block_length`` is not positive.
        """
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidArgumentError(
                'The grid dimension must be a positive integer', 'n')
        if not block_length > 0:
            raise InvalidArgumentError(
                'The block length must be positive', 'block_length')

        def node_at(row, col):
            if 0 <= row < n and 0 <= col < n:
                return row * n + col
            return None

        # Each lane is first described by (upstream, downstream, direction)
        specs = []
        for row in range(n):
            for col in range(n):
                for direction in Direction:
                    specs.append((
                        row * n + col,
                        node_at(
                            row + direction.row_step,
                            col + direction.col_step),
                        direction))
        for row in range(n):
            for col in range(n):
                for direction in Direction:
                    # A lane travelling in "direction" enters (row, col) from
                    # the boundary iff the previous node is off the grid
                    if node_at(
                            row - direction.row_step,
                            col - direction.col_step) is None:
                        specs.append((None, row * n + col, direction))

        lane_ids = {}
        for id_, (upstream, downstream, direction) in enumerate(specs):
            lane_ids[(upstream, downstream, direction)] = id_
        outgoing_ids = {}
        for (upstream, _, direction), id_ in lane_ids.items():
            if upstream is not None:
                outgoing_ids[(upstream, direction)] = id_

        lanes = []
        for id_, (upstream, downstream, direction) in enumerate(specs):
            if downstream is None:
                next_lane = None
                signal_index = None
            else:
                next_lane = outgoing_ids[(downstream, direction)]
                signal_index = direction.opposite().value
            lanes.append(
                Lane(
                    id_, upstream, downstream, float(block_length), direction,
                    next_lane, signal_index))

        intersections = []
        for row in range(n):
            for col in range(n):
                id_ = row * n + col
                incoming = {}
                outgoing = {}
                for lane in lanes:
                    if lane.downstream == id_:
                        incoming[lane.direction.opposite()] = lane.id
                    if lane.upstream == id_:
                        outgoing[lane.direction] = lane.id
                if 0 < row < n - 1 and 0 < col < n - 1:
                    centrality = Centrality.CENTRAL
                else:
                    centrality = Centrality.EDGE
                intersections.append(
                    Intersection(
                        id_, row, col,
                        {side: incoming[side] for side in Direction},
                        {side: outgoing[side] for side in Direction},
                        centrality))

        routes = {}
        for lane in lanes:
            if lane.is_inflow:
                route = [lane.id]
                while lanes[route[-1]].next_lane is not None:
                    route.append(lanes[route[-1]].next_lane)
                routes[lane.id] = tuple(route)
        return RoadNetwork(
            n, float(block_length), intersections, lanes, routes)

    @property
    def num_intersections(self):
        """The number of intersections, ``C``."""
        return len(self.intersections)

    @property
    def num_lanes(self):
        """The number of lanes, ``M``, including inflow and outflow lanes."""
        return len(self.lanes)

    def intersection(self, c):
        """Return the ``Intersection`` with the specified ID.

        Raises:
            NotFoundError: If there is no such intersection.
        """
        if (not isinstance(c, numbers.Integral) or
                not 0 <= c < len(self.intersections)):
            raise NotFoundError('No intersection with ID {!r}'.format(c))
        return self.intersections[int(c)]

    def lane(self, m):
        """Return the ``Lane`` with the specified ID.

        Raises:
            NotFoundError: If there is no such lane.
        """
        if (not isinstance(m, numbers.Integral) or
                not 0 <= m < len(self.lanes)):
            raise NotFoundError('No lane with ID {!r}'.format(m))
        return self.lanes[int(m)]

    def lanes_of_intersection(self, c):
        """Return the incoming and outgoing lanes of an intersection.

        Arguments:
            c (int): The intersection ID.

        Returns:
            tuple<list<int>, list<int>>: The incoming lane IDs, in order
                of the approach sides N, E, S, W, and the outgoing lane
                IDs, in order of the directions of travel N, E, S, W.

        Raises:
            NotFoundError: If there is no such intersection.
        """
        intersection = self.intersection(c)
        return (
            [intersection.incoming[side] for side in Direction],
            [intersection.outgoing[side] for side in Direction])

    def signalized_lanes(self):
        """Return the IDs of the lanes that have a signal head."""
        return self._signalized_lanes

    def central_intersections(self):
        """Return the IDs of the interior intersections."""
        return [
            intersection.id for intersection in self.intersections
            if intersection.centrality == Centrality.CENTRAL]

    def edge_intersections(self):
        """Return the IDs of the boundary intersections."""
        return [
            intersection.id for intersection in self.intersections
            if intersection.centrality == Centrality.EDGE]

    def route(self, inflow_lane):
        """Return the straight route that starts on the given inflow lane.

        Arguments:
            inflow_lane (int): The ID of an inflow lane.

        Returns:
            tuple<int>: The lane IDs, ending with an outflow lane.

        Raises:
            NotFoundError: If the lane is not an inflow lane.
        """
        if inflow_lane not in self._routes:
            raise NotFoundError(
                'No inflow lane with ID {!r}'.format(inflow_lane))
        return self._routes[inflow_lane]

    def _node_name(self, c, lane, upstream):
        """Return the name of the node at one end of a lane.

        Boundary nodes are named after the side of the map and the row
        or column they are on, e.g. ``'bN2'``.
        """
        if c is not None:
            return self.intersections[c].name
        neighbor = self.intersections[
            lane.downstream if upstream else lane.upstream]
        if upstream:
            side = lane.direction.opposite()
        else:
            side = lane.direction
        if side in (Direction.NORTH, Direction.SOUTH):
            index = neighbor.col
        else:
            index = neighbor.row
        return 'b{:s}{:d}'.format(side.letter, index)

    def to_json(self):
        """Return a JSON-compatible description of the topology.

        Returns:
            dict: A dictionary with the keys ``'n'``,
                ``'block_length'``, ``'nodes'``, ``'lanes'`` and
                ``'routes'``.
        """
        nodes = []
        for intersection in self.intersections:
            nodes.append({
                'id': intersection.id,
                'name': intersection.name,
                'row': intersection.row,
                'col': intersection.col,
                'centrality': intersection.centrality.value,
                'incoming': [
                    intersection.incoming[side] for side in Direction],
                'outgoing': [
                    intersection.outgoing[side] for side in Direction],
            })
        lanes = []
        for lane in self.lanes:
            lanes.append({
                'id': lane.id,
                'from': self._node_name(lane.upstream, lane, True),
                'to': self._node_name(lane.downstream, lane, False),
                'length': lane.length,
                'direction': lane.direction.letter,
                'inflow': lane.is_inflow,
                'outflow': lane.is_outflow,
            })
        return {
            'n': self.n,
            'block_length': self.block_length,
            'nodes': nodes,
            'lanes': lanes,
            'routes': [list(self._routes[m]) for m in self.inflow_edges],
        }

    def export_json(self, filename):
        """Write the topology returned by ``to_json()`` to a file."""
        with open(filename, 'w') as file:
            json.dump(self.to_json(), file, indent=4)
            file.write('\n')
