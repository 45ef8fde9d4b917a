from ..errors import InvalidArgumentError


class ApproxConfig:
    """The parameters of the value-function approximators.

    Public attributes:

    str kind - ``'neural'`` or ``'tabular'``.
    tuple<int> hidden - The sizes of the hidden layers of ``NeuralQ``.
    float learning_rate - The Adam step size.
    float adam_eps - The Adam stability constant.
    int target_update - The number of gradient updates between
        refreshes of the target network.
    int replay_capacity - The capacity of the replay buffer of each
        policy group.
    str observation_mode - ``'global'`` to give every agent the whole
        network state, or ``'local'`` to restrict each agent to its
        incoming lanes and its own phase.
    int halting_cap - ``TabularQ`` clips halting counts to
        ``0 .. halting_cap``.
    int speed_bins - The number of uniform bins ``TabularQ`` splits the
        speed lag ``0 .. v_max`` into.
    int init_seed - The seed of the initial network weights.
    """

    FIELDS = (
        'kind', 'hidden', 'learning_rate', 'adam_eps', 'target_update',
        'replay_capacity', 'observation_mode', 'halting_cap', 'speed_bins',
        'init_seed')

    PUBLISHED_FIELDS = ('hidden', 'learning_rate', 'adam_eps', 'target_update')

    KINDS = ('neural', 'tabular')
    OBSERVATION_MODES = ('global', 'local')

    def __init__(
            self, kind='neural', hidden=(256, 256), learning_rate=6.25e-5,
            adam_eps=1.5e-4, target_update=8000, replay_capacity=50000,
            observation_mode='global', halting_cap=10, speed_bins=6,
            init_seed=0):
        if kind not in ApproxConfig.KINDS:
            raise InvalidArgumentError(
                'kind must be "neural" or "tabular"', 'kind')
        hidden = tuple(hidden)
        if not hidden or any(
                not isinstance(size, int) or size < 1 for size in hidden):
            raise InvalidArgumentError(
                'hidden must be a non-empty list of positive integers',
                'hidden')
        if not learning_rate > 0:
            raise InvalidArgumentError(
                'learning_rate must be positive', 'learning_rate')
        if not adam_eps > 0:
            raise InvalidArgumentError('adam_eps must be positive', 'adam_eps')
        for name, value in (
                ('target_update', target_update),
                ('replay_capacity', replay_capacity),
                ('halting_cap', halting_cap), ('speed_bins', speed_bins)):
            if not isinstance(value, int) or value < 1:
                raise InvalidArgumentError(
                    '{:s} must be a positive integer'.format(name), name)
        if observation_mode not in ApproxConfig.OBSERVATION_MODES:
            raise InvalidArgumentError(
                'observation_mode must be "global" or "local"',
                'observation_mode')
        self.kind = kind
        self.hidden = hidden
        self.learning_rate = float(learning_rate)
        self.adam_eps = float(adam_eps)
        self.target_update = target_update
        self.replay_capacity = replay_capacity
        self.observation_mode = observation_mode
        self.halting_cap = halting_cap
        self.speed_bins = speed_bins
        self.init_seed = init_seed

    def to_json(self):
        json = {name: getattr(self, name) for name in ApproxConfig.FIELDS}
        json['hidden'] = list(self.hidden)
        return json
