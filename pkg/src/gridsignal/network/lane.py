from ..errors import InvalidArgumentError


class Lane:
    """A single directed lane between two grid nodes.

    Public attributes:

    int id - The lane's index ``m`` in ``range(M)``.
    int upstream - The ID of the intersection the lane leaves, or
        ``None`` if it enters from the boundary.
    int downstream - The ID of the intersection the lane arrives at, or
        ``None`` if it leaves the map.
    float length - The length of the lane, in meters.
    Direction direction - The direction of travel.
    bool is_inflow - Whether vehicles enter the map on this lane.
    bool is_outflow - Whether vehicles leave the map at the end of this
        lane. Outflow lanes have no signal head.
    int next_lane - The ID of the lane continuing straight past the
        downstream intersection, or ``None`` for outflow lanes.
    int signal_index - The index of this lane's indication in the phase
        string of the downstream intersection (0 to 3, in the order of
        the approach sides N, E, S, W), or ``None`` for outflow lanes.
    """

    def __init__(
            self, id_, upstream, downstream, length, direction, next_lane,
            signal_index):
        if length <= 0:
            raise InvalidArgumentError(
                'Lane length must be positive', 'length')
        self.id = id_
        self.upstream = upstream
        self.downstream = downstream
        self.length = length
        self.direction = direction
        self.is_inflow = upstream is None
        self.is_outflow = downstream is None
        self.next_lane = next_lane
        self.signal_index = signal_index

    @property
    def is_signalized(self):
        return not self.is_outflow

    def __repr__(self):
        return 'Lane({:d}, {:s}, {!r} -> {!r})'.format(
            self.id, self.direction.letter, self.upstream, self.downstream)
