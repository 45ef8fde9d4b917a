from ..errors import EmptyBufferError
from ..errors import InvalidArgumentError


class ReplayBuffer:
    """A fixed-capacity ring buffer of transitions.

    Once the buffer is full, each new transition replaces the oldest
    one. Sampling is uniform with replacement.
    """

    # Private attributes:
    #
    # list<Transition> _items - The stored transitions, in ring order.
    # int _next - The index in _items of the slot the next store goes to.

    def __init__(self, capacity):
        if not isinstance(capacity, int) or capacity < 1:
            raise InvalidArgumentError(
                'The capacity must be a positive integer', 'capacity')
        self.capacity = capacity
        self._items = []
        self._next = 0

    def __len__(self):
        return len(self._items)

    def store(self, transition):
        """Add a transition, evicting the oldest one if the buffer is full.
        """
        if len(self._items) < self.capacity:
            self._items.append(transition)
        else:
            self._items[self._next] = transition
        self._next = (self._next + 1) % self.capacity

    def extend(self, transitions):
        for transition in transitions:
            self.store(transition)

    def sample(self, batch_size, rng):
        """Return ``batch_size`` transitions drawn uniformly with replacement.

        Arguments:
            batch_size (int): The number of transitions.
            rng (numpy.random.Generator): The random number generator.

        Returns:
            list<Transition>: The transitions.

        Raises:
            EmptyBufferError: If the buffer is empty.
        """
        if not self._items:
            raise EmptyBufferError('Unable to sample from an empty buffer')
        indices = rng.integers(0, len(self._items), size=batch_size)
        return [self._items[index] for index in indices]
