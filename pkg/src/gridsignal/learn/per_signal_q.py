import numpy as np

from ..errors import NumericFault


class PerSignalQ:
    """The Q-function ``Q_c(s, a_c)`` of the signal at one intersection.

    Agents of the same policy group hold the same approximator, so an
    update through one of them is seen by all of them. The approximator
    receives the intersection ID with every query, which lets it tell
    the agents apart.

    Public attributes:

    int intersection - The intersection ID ``c``.
    ValueApproximator approximator - The underlying approximator.
    PolicyGroup group - The policy group of the agent.
    """

    def __init__(self, intersection, approximator, group):
        self.intersection = intersection
        self.approximator = approximator
        self.group = group

    def q_values(self, state):
        """Return the values of holding (0) and switching (1) in ``state``.

        Returns:
            numpy.ndarray: A vector of two floats.

        Raises:
            NumericFault: If a value is not finite.
        """
        values = np.asarray(
            self.approximator.q_values(state, self.intersection),
            dtype=np.float64)
        if not np.all(np.isfinite(values)):
            raise NumericFault(
                'Non-finite Q values {!r} for intersection {:d}'.format(
                    values.tolist(), self.intersection))
        return values

    def __repr__(self):
        return 'PerSignalQ({:d}, {:s})'.format(
            self.intersection, self.group.value)
