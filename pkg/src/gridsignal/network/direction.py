from enum import Enum


class Direction(Enum):
    """A cardinal direction on the grid.

    Rows grow southward and columns grow eastward, so ``row_step`` and
    ``col_step`` give the grid offset of one block travelled in this
    direction.
    """

    NORTH = 0
    EAST = 1
    SOUTH = 2
    WEST = 3

    @property
    def row_step(self):
        return {0: -1, 1: 0, 2: 1, 3: 0}[self.value]

    @property
    def col_step(self):
        return {0: 0, 1: 1, 2: 0, 3: -1}[self.value]

    def opposite(self):
        """Return the direction pointing the other way."""
        return Direction((self.value + 2) % 4)

    @property
    def letter(self):
        return self.name[0]
