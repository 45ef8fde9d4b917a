from ..errors import InvalidArgumentError


class TrainConfig:
    """The parameters of a training run.

    Public attributes:

    int rollout_length - The number of steps of a rollout.
    int rollouts_per_iteration - The number of rollouts per iteration.
    int iterations - The number of iterations.
    str policy_mode - ``'shared'`` for one policy shared by every
        signal, or ``'multi'`` for separate central and edge policies.
    int eval_every - We write a checkpoint every this many iterations.
    int warmup_steps - The number of transitions a policy group's replay
        buffer must hold before the group's updates start.
    int sync_every - The number of environment steps between updates.
    int batch_size - The number of transitions per update and group.
    int eval_episodes - The number of episodes ``evaluate`` replays.
    """

    FIELDS = (
        'rollout_length', 'rollouts_per_iteration', 'iterations',
        'policy_mode', 'eval_every', 'warmup_steps', 'sync_every',
        'batch_size', 'eval_episodes')

    PUBLISHED_FIELDS = (
        'rollout_length', 'rollouts_per_iteration', 'iterations',
        'batch_size')

    POLICY_MODES = ('shared', 'multi')

    def __init__(
            self, rollout_length=1000, rollouts_per_iteration=30,
            iterations=100, policy_mode='shared', eval_every=10,
            warmup_steps=10000, sync_every=4, batch_size=1000,
            eval_episodes=5):
        for name, value in (
                ('rollout_length', rollout_length),
                ('rollouts_per_iteration', rollouts_per_iteration),
                ('iterations', iterations), ('eval_every', eval_every),
                ('sync_every', sync_every), ('batch_size', batch_size),
                ('eval_episodes', eval_episodes)):
            if not isinstance(value, int) or value < 1:
                raise InvalidArgumentError(
                    '{:s} must be a positive integer'.format(name), name)
        if not isinstance(warmup_steps, int) or warmup_steps < 0:
            raise InvalidArgumentError(
                'warmup_steps must be a non-negative integer', 'warmup_steps')
        if policy_mode not in TrainConfig.POLICY_MODES:
            raise InvalidArgumentError(
                'policy_mode must be "shared" or "multi"', 'policy_mode')
        self.rollout_length = rollout_length
        self.rollouts_per_iteration = rollouts_per_iteration
        self.iterations = iterations
        self.policy_mode = policy_mode
        self.eval_every = eval_every
        self.warmup_steps = warmup_steps
        self.sync_every = sync_every
        self.batch_size = batch_size
        self.eval_episodes = eval_episodes

    @property
    def steps_per_iteration(self):
        return self.rollouts_per_iteration * self.rollout_length

    @property
    def total_steps(self):
        """The number of environment steps of the whole run."""
        return self.iterations * self.steps_per_iteration

    def to_json(self):
        return {name: getattr(self, name) for name in TrainConfig.FIELDS}
