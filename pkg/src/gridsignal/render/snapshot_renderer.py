from PIL import Image
from PIL import ImageDraw


class SnapshotRenderer:
    """Draws still images of a grid simulation.

    Lanes are grey strokes, offset to the right of the road center in
    their direction of travel. Every signal head is a small square at
    the stop line, colored by its indication. Vehicles are dots whose
    shade goes from red when halting to blue at the speed limit.
    """

    # The background color
    BACKGROUND = (255, 255, 255)

    # The lane color
    LANE = (170, 170, 170)

    # The colors of the indications
    INDICATION_COLORS = {
        'G': (0, 170, 0),
        'y': (230, 180, 0),
        'r': (210, 0, 0),
    }

    def __init__(self, net, scale=1.0, margin=20):
        """Initialize a new ``SnapshotRenderer``.

        Arguments:
            net (RoadNetwork): The network.
            scale (float): The number of pixels per meter.
            margin (int): The blank border around the map, in pixels.
        """
        self._net = net
        self._scale = scale
        self._margin = margin
        self._block = net.block_length * scale
        size = int(round((net.n + 1) * self._block)) + 2 * margin
        self.size = (size, size)

    def _node_position(self, row, col):
        """Return the pixel position of grid position (row, col).

        Rows and columns may lie one step outside the grid, for the far
        ends of inflow and outflow lanes.
        """
        x = self._margin + (col + 1) * self._block
        y = self._margin + (row + 1) * self._block
        return x, y

    def _lane_endpoints(self, lane):
        """Return the pixel positions of the start and end of a lane."""
        direction = lane.direction
        if lane.upstream is not None:
            start = self._net.intersections[lane.upstream]
            row, col = start.row, start.col
        else:
            end = self._net.intersections[lane.downstream]
            row = end.row - direction.row_step
            col = end.col - direction.col_step
        x0, y0 = self._node_position(row, col)
        x1, y1 = self._node_position(
            row + direction.row_step, col + direction.col_step)
        # Offset to the right of the direction of travel
        offset = 3
        dx = (x1 - x0) / self._block
        dy = (y1 - y0) / self._block
        return (x0 - dy * offset, y0 + dx * offset), (
            x1 - dy * offset, y1 + dx * offset)

    def _point_on_lane(self, lane, position):
        (x0, y0), (x1, y1) = self._lane_endpoints(lane)
        fraction = min(max(position / lane.length, 0.0), 1.0)
        return x0 + fraction * (x1 - x0), y0 + fraction * (y1 - y0)

    def render(self, world, signals):
        """Return an image of the current state of a simulation.

        Arguments:
            world (WorldState): The simulation state.
            signals (list<SignalState>): The signal states, indexed by
                intersection ID.

        Returns:
            Image: The RGB image.
        """
        image = Image.new('RGB', self.size, SnapshotRenderer.BACKGROUND)
        draw = ImageDraw.Draw(image)
        for lane in self._net.lanes:
            draw.line(
                self._lane_endpoints(lane), fill=SnapshotRenderer.LANE,
                width=3)

        for lane in self._net.lanes:
            if lane.is_outflow:
                continue
            indication = signals[lane.downstream].indication(
                lane.signal_index)
            x, y = self._point_on_lane(lane, lane.length - 4)
            draw.rectangle(
                (x - 3, y - 3, x + 3, y + 3),
                fill=SnapshotRenderer.INDICATION_COLORS[indication])

        v_max = world.config.v_max
        for vehicle in world.vehicles.values():
            lane = self._net.lanes[vehicle.lane]
            x, y = self._point_on_lane(lane, vehicle.position)
            fraction = min(vehicle.speed / v_max, 1.0)
            color = (
                int(round(220 * (1 - fraction))), 40,
                int(round(220 * fraction)))
            draw.ellipse((x - 2, y - 2, x + 2, y + 2), fill=color)
        return image

    def save(self, world, signals, filename):
        """Render the current state and write it to a PNG file."""
        self.render(world, signals).save(filename, 'PNG')
