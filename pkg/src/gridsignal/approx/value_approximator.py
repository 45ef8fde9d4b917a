import numpy as np


class ValueApproximator:
    """Abstract base class for a per-signal value-function approximator.

    One approximator serves every agent of a policy group. Queries name
    the agent by its intersection ID. Updates are not thread-safe; reads
    are safe between updates.
    """

    # The approximator kind, as stored in checkpoints
    KIND = None

    def q_values(self, state, agent):
        """Return the values of the two local actions of ``agent``.

        Arguments:
            state: The state.
            agent (int): The intersection ID of the agent.

        Returns:
            numpy.ndarray: A vector of two floats.
        """
        raise NotImplementedError('Subclasses must implement')

    def q_values_batch(self, state, agents):
        """Return a ``len(agents) x 2`` array of ``q_values`` results."""
        return np.array([self.q_values(state, agent) for agent in agents])

    def batch_update(self, transitions, cfg):
        """Update the approximator toward the targets of some transitions.

        Arguments:
            transitions (list<Transition>): A non-empty batch.
            cfg (LearnConfig): The learning parameters.

        Returns:
            float: The mean squared error between the values and the
                targets before the update.
        """
        raise NotImplementedError('Subclasses must implement')

    def scale_learning_rate(self, multiplier):
        """Multiply the learning rate by a positive factor."""
        raise NotImplementedError('Subclasses must implement')

    def write_params(self, output):
        """Write the parameters to a binary file using ``CheckpointIO``."""
        raise NotImplementedError('Subclasses must implement')

    def read_params(self, input_):
        """Replace the parameters with those written by ``write_params``.

        Raises:
            CheckpointError: If the data is truncated or does not fit
                this approximator.
        """
        raise NotImplementedError('Subclasses must implement')
