import logging

from ..errors import InvalidArgumentError

logger = logging.getLogger(__name__)


class InterEsHook:
    """Tunes the learning rates of the policy groups between iterations.

    After every iteration the trainer passes the reports so far to
    ``multipliers`` and multiplies the learning rate of each group by
    the returned factor. Factors are always positive.
    """

    def multipliers(self, reports):
        """Return the learning-rate factor of each policy group.

        Arguments:
            reports (list<IterationReport>): The reports so far, the last
                one being the current iteration's.

        Returns:
            dict<str, float>: A map from group names to factors. Groups
                that are missing keep their learning rate.
        """
        raise NotImplementedError('Subclasses must implement')


class IdentityHook(InterEsHook):
    """Leaves every learning rate unchanged."""

    def multipliers(self, reports):
        return {group: 1.0 for group in reports[-1].group_rewards}


class PlateauHook(InterEsHook):
    """Halves a group's learning rate when its reward stops improving.

    This is a demonstration rule. If the per-agent reward of a group
    changed by less than ``tolerance`` between consecutive iterations
    throughout the last ``window`` iterations, we multiply its learning
    rate by ``factor``. After an adjustment we wait for ``window`` more
    iterations before adjusting that group again.
    """

    def __init__(self, tolerance=1.0, window=5, factor=0.5):
        if not tolerance > 0:
            raise InvalidArgumentError(
                'tolerance must be positive', 'tolerance')
        if not isinstance(window, int) or window < 2:
            raise InvalidArgumentError(
                'window must be an integer of at least 2', 'window')
        if not 0 < factor:
            raise InvalidArgumentError('factor must be positive', 'factor')
        self.tolerance = tolerance
        self.window = window
        self.factor = factor
        self._last_adjusted = {}

    def multipliers(self, reports):
        result = {}
        current = reports[-1].iteration
        for group in reports[-1].group_rewards:
            result[group] = 1.0
            if len(reports) < self.window:
                continue
            if current - self._last_adjusted.get(group, 0) < self.window:
                continue
            recent = [
                report.group_rewards[group]
                for report in reports[-self.window:]]
            if all(
                    abs(later - earlier) < self.tolerance
                    for earlier, later in zip(recent, recent[1:])):
                logger.info(
                    'Reward of group %s plateaued at %g; scaling its '
                    'learning rate by %g', group, recent[-1], self.factor)
                self._last_adjusted[group] = current
                result[group] = self.factor
        return result
