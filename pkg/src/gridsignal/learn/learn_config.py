from ..errors import InvalidArgumentError


class LinearSchedule:
    """A value that moves linearly from ``start`` to ``end``.

    The value reaches ``end`` after ``duration`` steps and stays there.
    A ``duration`` of 0 means the value is always ``end``.
    """

    def __init__(self, start, end, duration):
        if duration < 0:
            raise InvalidArgumentError(
                'The schedule duration may not be negative', 'duration')
        self.start = float(start)
        self.end = float(end)
        self.duration = duration

    def value(self, step):
        if step >= self.duration:
            return self.end
        fraction = step / self.duration
        return self.start + fraction * (self.end - self.start)

    def __repr__(self):
        return 'LinearSchedule({:g}, {:g}, {:d})'.format(
            self.start, self.end, self.duration)


class LearnConfig:
    """The parameters of the per-signal Q-learning rule.

    Public attributes:

    float gamma - The discount factor, in ``[0, 1)``.
    float alpha - The tabular learning rate ``alpha`` in ``[0, 1]``,
        when ``alpha_mode`` is ``'constant'``.
    str alpha_mode - ``'constant'`` for a fixed rate, or ``'visits'``
        for ``1 / n``, where ``n`` counts the updates of the
        state-action pair so far, including the current one.
    float epsilon_start - The exploration probability at step 0.
    float epsilon_end - The exploration probability after the decay.
    float epsilon_fraction - The fraction of the total environment steps
        over which epsilon decays linearly.
    str target_mode - ``'qmax'`` for the off-policy target
        ``gamma * max_a Q(s', a)``, or ``'sarsa'`` for the on-policy
        target ``gamma * Q(s', a')``. Both add ``(1 - gamma) * R``.
    """

    FIELDS = (
        'gamma', 'alpha', 'alpha_mode', 'epsilon_start', 'epsilon_end',
        'epsilon_fraction', 'target_mode')

    PUBLISHED_FIELDS = ()

    ALPHA_MODES = ('constant', 'visits')
    TARGET_MODES = ('qmax', 'sarsa')

    def __init__(
            self, gamma=0.99, alpha=0.1, alpha_mode='constant',
            epsilon_start=1.0, epsilon_end=0.02, epsilon_fraction=0.1,
            target_mode='qmax'):
        if not 0 <= gamma < 1:
            raise InvalidArgumentError('gamma must be in [0, 1)', 'gamma')
        if not 0 <= alpha <= 1:
            raise InvalidArgumentError('alpha must be in [0, 1]', 'alpha')
        if alpha_mode not in LearnConfig.ALPHA_MODES:
            raise InvalidArgumentError(
                'alpha_mode must be one of {:s}'.format(
                    ', '.join(LearnConfig.ALPHA_MODES)),
                'alpha_mode')
        for name, value in (
                ('epsilon_start', epsilon_start),
                ('epsilon_end', epsilon_end),
                ('epsilon_fraction', epsilon_fraction)):
            if not 0 <= value <= 1:
                raise InvalidArgumentError(
                    '{:s} must be in [0, 1]'.format(name), name)
        if target_mode not in LearnConfig.TARGET_MODES:
            raise InvalidArgumentError(
                'target_mode must be one of {:s}'.format(
                    ', '.join(LearnConfig.TARGET_MODES)),
                'target_mode')
        self.gamma = float(gamma)
        self.alpha = float(alpha)
        self.alpha_mode = alpha_mode
        self.epsilon_start = float(epsilon_start)
        self.epsilon_end = float(epsilon_end)
        self.epsilon_fraction = float(epsilon_fraction)
        self.target_mode = target_mode

    def epsilon_schedule(self, total_steps):
        """Return the ``LinearSchedule`` of epsilon for a training run.

        Arguments:
            total_steps (int): The number of environment steps of the run.
        """
        return LinearSchedule(
            self.epsilon_start, self.epsilon_end,
            int(round(self.epsilon_fraction * total_steps)))

    def learning_rate(self, visits):
        """Return the tabular learning rate of an update.

        Arguments:
            visits (int): The number of updates of the state-action pair
                so far, including this one.
        """
        if self.alpha_mode == 'visits':
            return 1.0 / max(visits, 1)
        return self.alpha

    def to_json(self):
        return {name: getattr(self, name) for name in LearnConfig.FIELDS}
