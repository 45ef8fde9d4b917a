class WorldState:
    """The mutable state of one simulation instance.

    A ``WorldState`` belongs to a single simulation. Nothing in it is
    shared with other instances.

    Public attributes:

    SimConfig config - The simulation parameters.
    dict<int, Vehicle> vehicles - A map from vehicle IDs to the vehicles
        currently on the map.
    list<list<int>> lane_vehicles - For each lane ID, the IDs of the
        vehicles on the lane, ordered from the stop line backward, i.e.
        by decreasing position.
    int step - The number of steps simulated so far, ``k``.
    int entered - The number of vehicles that have entered the map.
    int departed - The number of vehicles that have left the map.
    """

    def __init__(self, net, config):
        self.config = config
        self.vehicles = {}
        self.lane_vehicles = [[] for _ in range(net.num_lanes)]
        self.step = 0
        self.entered = 0
        self.departed = 0
        self._next_id = 0

    def new_vehicle_id(self):
        """Return an unused vehicle ID."""
        id_ = self._next_id
        self._next_id += 1
        return id_

    def last_vehicle(self, lane):
        """Return the rearmost ``Vehicle`` on the given lane, if any."""
        ids = self.lane_vehicles[lane]
        if ids:
            return self.vehicles[ids[-1]]
        return None

    def is_conserved(self):
        """Return whether entered = departed + vehicles present."""
        return self.entered == self.departed + len(self.vehicles)
