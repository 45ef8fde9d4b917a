class Vehicle:
    """A vehicle travelling straight through the grid.

    Public attributes:

    int id - The vehicle's ID, unique within a simulation.
    tuple<int> route - The IDs of the lanes on the vehicle's route.
    int route_index - The index in ``route`` of the current lane.
    float position - The position of the front bumper, in meters from
        the start of the current lane.
    float speed - The speed, in m/s.
    int entered_at - The step at which the vehicle entered the map.
    float waiting_time - The number of seconds the vehicle has been
        halting without interruption.
    float accumulated_waiting - The total number of seconds the vehicle
        has been halting.
    """

    def __init__(self, id_, route, position, speed, entered_at):
        self.id = id_
        self.route = route
        self.route_index = 0
        self.position = position
        self.speed = speed
        self.entered_at = entered_at
        self.waiting_time = 0.0
        self.accumulated_waiting = 0.0

    @property
    def lane(self):
        """The ID of the current lane."""
        return self.route[self.route_index]

    def __repr__(self):
        return 'Vehicle({:d}, lane={:d}, x={:.2f}, v={:.2f})'.format(
            self.id, self.lane, self.position, self.speed)
