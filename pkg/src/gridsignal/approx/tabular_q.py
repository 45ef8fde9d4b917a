import numbers

import numpy as np

from ..errors import CheckpointError
from ..errors import InvalidArgumentError
from ..learn import td_targets
from .checkpoint_io import CheckpointIO
from .featurizer import Discretizer
from .value_approximator import ValueApproximator


class TabularQ(ValueApproximator):
    """An exact table of per-signal Q values.

    Values are keyed by the agent, the discretized state and the action.
    Keys that were never updated read as 0. The table also counts the
    updates of every entry, which the ``'visits'`` learning-rate mode
    uses.
    """

    KIND = 'tabular'

    # Private attributes:
    #
    # float _alpha_multiplier - The factor applied to every learning rate.
    # Discretizer _discretizer - The state discretizer.
    # dict<tuple, numpy.ndarray> _values - A map from (agent, state key) to
    #     the values of the two actions.
    # dict<tuple, numpy.ndarray> _visits - A map from (agent, state key) to
    #     the update counts of the two actions.

    def __init__(self, discretizer=None):
        self._discretizer = (
            discretizer if discretizer is not None else Discretizer())
        self._values = {}
        self._visits = {}
        self._alpha_multiplier = 1.0

    def __len__(self):
        """Return the number of (agent, state) entries in the table."""
        return len(self._values)

    def _key(self, state, agent):
        return (agent, self._discretizer.key(state, agent))

    def q_values(self, state, agent):
        values = self._values.get(self._key(state, agent))
        if values is None:
            return np.zeros(2)
        return values.copy()

    def visits(self, state, agent):
        """Return the update counts of the two actions of ``agent``."""
        visits = self._visits.get(self._key(state, agent))
        if visits is None:
            return np.zeros(2, dtype=np.int64)
        return visits.copy()

    def set_value(self, state, agent, action, value):
        """Set a single entry of the table."""
        key = self._key(state, agent)
        self._values.setdefault(key, np.zeros(2))[action] = value
        self._visits.setdefault(key, np.zeros(2, dtype=np.int64))

    def batch_update(self, transitions, cfg):
        """Apply the tabular update to each transition, in order.

        The new value of ``(s, a)`` is ``(1 - alpha) * Q(s, a) + alpha * T``,
        where ``T`` is computed from the table as it stands right before
        the transition's update.

        Returns:
            float: The mean of ``(T - Q(s, a))^2`` over the transitions,
                each measured right before its update.
        """
        if not transitions:
            raise InvalidArgumentError('The batch is empty', 'transitions')
        squared_errors = 0.0
        for transition in transitions:
            key = self._key(transition.state, transition.agent)
            next_values = self.q_values(
                transition.next_state, transition.agent)
            target = td_targets(
                [transition.reward], next_values[np.newaxis, :],
                [transition.next_action], [transition.terminal], cfg)[0]
            values = self._values.setdefault(key, np.zeros(2))
            visits = self._visits.setdefault(
                key, np.zeros(2, dtype=np.int64))
            visits[transition.action] += 1
            alpha = min(
                1.0,
                self._alpha_multiplier * cfg.learning_rate(
                    int(visits[transition.action])))
            error = target - values[transition.action]
            squared_errors += error * error
            values[transition.action] += alpha * error
        return squared_errors / len(transitions)

    def greedy_policy(self, states, agent):
        """Return the greedy action of ``agent`` in each of ``states``."""
        policy = []
        for state in states:
            values = self.q_values(state, agent)
            policy.append(int(values[1] > values[0]))
        return policy

    def scale_learning_rate(self, multiplier):
        if not multiplier > 0:
            raise InvalidArgumentError(
                'The multiplier must be positive', 'multiplier')
        self._alpha_multiplier *= multiplier

    @staticmethod
    def _write_key(output, key):
        # Scalar keys are written with a length of -1
        if isinstance(key, numbers.Integral):
            CheckpointIO.write_int(output, -1)
            CheckpointIO.write_long(output, int(key))
        else:
            CheckpointIO.write_int(output, len(key))
            for value in key:
                CheckpointIO.write_long(output, int(value))

    @staticmethod
    def _read_key(input_):
        length = CheckpointIO.read_int(input_)
        if length == -1:
            return CheckpointIO.read_long(input_)
        elif length < 0:
            raise CheckpointError('Corrupt table key in checkpoint file')
        return tuple(CheckpointIO.read_long(input_) for _ in range(length))

    def write_params(self, output):
        for key in self._values:
            if not isinstance(key[1], (numbers.Integral, tuple)):
                raise InvalidArgumentError(
                    'Only integer and tuple state keys can be saved', 'key')
        CheckpointIO.write_int(output, len(self._values))
        for (agent, state_key), values in self._values.items():
            CheckpointIO.write_int(output, agent)
            TabularQ._write_key(output, state_key)
            CheckpointIO.write_array(output, values)
            visits = self._visits[(agent, state_key)]
            CheckpointIO.write_long(output, int(visits[0]))
            CheckpointIO.write_long(output, int(visits[1]))

    def read_params(self, input_):
        count = CheckpointIO.read_int(input_)
        if count < 0:
            raise CheckpointError('Corrupt table size in checkpoint file')
        values = {}
        visits = {}
        for _ in range(count):
            agent = CheckpointIO.read_int(input_)
            key = (agent, TabularQ._read_key(input_))
            entry = CheckpointIO.read_array(input_)
            if entry.shape != (2,):
                raise CheckpointError('Corrupt table entry in checkpoint file')
            values[key] = entry.copy()
            visits[key] = np.array(
                [CheckpointIO.read_long(input_),
                 CheckpointIO.read_long(input_)],
                dtype=np.int64)
        self._values = values
        self._visits = visits
