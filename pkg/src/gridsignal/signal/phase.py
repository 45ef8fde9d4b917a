from enum import Enum


class Phase(Enum):
    """A signal phase of a four-way intersection.

    The value is the indication string, one character per approach side
    in the order N, E, S, W: ``G`` for green, ``y`` for yellow and ``r``
    for red. ``GrGr`` serves north-south traffic and ``rGrG`` serves
    east-west traffic. Phases cycle in the order GrGr, yryr, rGrG, ryry.
    """

    GRGR = 'GrGr'
    YRYR = 'yryr'
    RGRG = 'rGrG'
    RYRY = 'ryry'

    @property
    def index(self):
        """The position of the phase in the cycle, from 0 to 3."""
        return _CYCLE.index(self)

    @property
    def is_green(self):
        return 'G' in self.value

    @property
    def is_yellow(self):
        return 'y' in self.value

    def next(self):
        """Return the phase that follows this one in the cycle."""
        return _CYCLE[(self.index + 1) % len(_CYCLE)]

    def indication(self, signal_index):
        """Return the indication (``'G'``, ``'y'`` or ``'r'``) of one head.

        Arguments:
            signal_index (int): The approach side index, as in
                ``Lane.signal_index``.
        """
        return self.value[signal_index]

    @staticmethod
    def from_index(index):
        return _CYCLE[index]


_CYCLE = (Phase.GRGR, Phase.YRYR, Phase.RGRG, Phase.RYRY)
