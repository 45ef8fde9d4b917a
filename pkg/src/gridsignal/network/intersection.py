from enum import Enum


class Centrality(Enum):
    """Whether an intersection is an interior node or a boundary node."""

    CENTRAL = 'central'
    EDGE = 'edge'


class Intersection:
    """A four-way, signal-controlled intersection of the grid.

    Public attributes:

    int id - The intersection's index, ``row * n + col``.
    int row - The grid row, counting from the north boundary.
    int col - The grid column, counting from the west boundary.
    dict<Direction, int> incoming - A map from the side of the
        intersection a lane arrives from to the ID of that lane.
    dict<Direction, int> outgoing - A map from the direction of travel
        to the ID of the lane leaving in that direction.
    Centrality centrality - ``CENTRAL`` for interior nodes and ``EDGE``
        for nodes on the boundary of the grid.
    """

    def __init__(self, id_, row, col, incoming, outgoing, centrality):
        self.id = id_
        self.row = row
        self.col = col
        self.incoming = incoming
        self.outgoing = outgoing
        self.centrality = centrality

    @property
    def name(self):
        return 'i{:d}_{:d}'.format(self.row, self.col)

    def __repr__(self):
        return 'Intersection({:s}, {:s})'.format(
            self.name, self.centrality.value)
