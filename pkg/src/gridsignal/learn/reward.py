from enum import Enum

import numpy as np

from ..errors import InvalidArgumentError
from ..network import Centrality


class PolicyGroup(Enum):
    """A set of agents that share one approximator and one reward."""

    SHARED = 'shared'
    CENTRAL = 'central'
    EDGE = 'edge'


class RewardWeights:
    """The weights of the halting and speed-lag terms of the rewards.

    The reward of a set of lanes is ``-(w1 * H + w2 * dV)`` summed over
    the lanes. SharedPolicy uses ``w1`` and ``w2`` for every signal;
    MultiPolicy uses the central weights for interior intersections and
    the edge weights for boundary intersections. Central weights must be
    strictly larger than edge weights.
    """

    FIELDS = (
        'w1', 'w2', 'w1_central', 'w2_central', 'w1_edge', 'w2_edge')

    # Only the ordering of the weights is fixed, not their values
    PUBLISHED_FIELDS = ()

    def __init__(
            self, w1=1.0, w2=0.1, w1_central=2.0, w2_central=0.2, w1_edge=1.0,
            w2_edge=0.1):
        for name, value in (
                ('w1', w1), ('w2', w2), ('w1_central', w1_central),
                ('w2_central', w2_central), ('w1_edge', w1_edge),
                ('w2_edge', w2_edge)):
            if not value > 0:
                raise InvalidArgumentError(
                    '{:s} must be positive'.format(name), name)
        if not w1_central > w1_edge:
            raise InvalidArgumentError(
                'w1_central must be greater than w1_edge', 'w1_central')
        if not w2_central > w2_edge:
            raise InvalidArgumentError(
                'w2_central must be greater than w2_edge', 'w2_central')
        self.w1 = float(w1)
        self.w2 = float(w2)
        self.w1_central = float(w1_central)
        self.w2_central = float(w2_central)
        self.w1_edge = float(w1_edge)
        self.w2_edge = float(w2_edge)

    def for_group(self, group):
        """Return the pair ``(w1, w2)`` of the given ``PolicyGroup``."""
        if group == PolicyGroup.CENTRAL:
            return self.w1_central, self.w2_central
        elif group == PolicyGroup.EDGE:
            return self.w1_edge, self.w2_edge
        else:
            return self.w1, self.w2

    def scaled(self, factor):
        """Return a copy with every weight multiplied by ``factor``."""
        return RewardWeights(
            *(factor * getattr(self, name) for name in RewardWeights.FIELDS))

    def to_json(self):
        return {name: getattr(self, name) for name in RewardWeights.FIELDS}


def reward_shared(obs, weights, net=None):
    """Return the SharedPolicy reward ``R`` of a global state.

    Arguments:
        obs (GlobalObservation): The state.
        weights (RewardWeights): The weights. We use ``w1`` and ``w2``.
        net (RoadNetwork): If given, we only sum over the lanes that
            have a signal head, so that the result equals the sum of the
            per-signal rewards. Otherwise we sum over every lane.

    Returns:
        float: The reward. This is never positive.
    """
    halting = obs.halting
    speed_lag = obs.speed_lag
    if net is not None:
        lanes = list(net.signalized_lanes())
        halting = halting[lanes]
        speed_lag = speed_lag[lanes]
    return -float(
        weights.w1 * np.sum(halting) + weights.w2 * np.sum(speed_lag))


def signal_group(net, c, mode):
    """Return the ``PolicyGroup`` of intersection ``c``.

    Arguments:
        net (RoadNetwork): The network.
        c (int): The intersection ID.
        mode (str): ``'shared'`` or ``'multi'``.
    """
    if mode == 'shared':
        return PolicyGroup.SHARED
    elif mode == 'multi':
        if net.intersection(c).centrality == Centrality.CENTRAL:
            return PolicyGroup.CENTRAL
        return PolicyGroup.EDGE
    else:
        raise InvalidArgumentError(
            'Unknown policy mode {!r}'.format(mode), 'policy_mode')


def reward_per_signal(obs, net, c, weights, mode='shared'):
    """Return the local reward ``R_c`` of intersection ``c``.

    This is ``-(w1 * H_m + w2 * dV_m)`` summed over the incoming lanes of
    ``c``, with the weights of the policy group of ``c``. The incoming
    lanes of the intersections partition the signalized lanes, so in
    ``'shared'`` mode the rewards of all signals sum to
    ``reward_shared(obs, weights, net)``.

    Arguments:
        obs (GlobalObservation): The state.
        net (RoadNetwork): The network.
        c (int): The intersection ID.
        weights (RewardWeights): The weights.
        mode (str): ``'shared'`` or ``'multi'``.

    Returns:
        float: The reward.

    Raises:
        NotFoundError: If there is no such intersection.
    """
    w1, w2 = weights.for_group(signal_group(net, c, mode))
    incoming, _ = net.lanes_of_intersection(c)
    return -float(
        w1 * np.sum(obs.halting[incoming]) +
        w2 * np.sum(obs.speed_lag[incoming]))


def rewards_per_signal(obs, net, weights, mode='shared'):
    """Return the vector of ``reward_per_signal`` over all intersections.
    """
    return np.array([
        reward_per_signal(obs, net, c, weights, mode)
        for c in range(net.num_intersections)])
