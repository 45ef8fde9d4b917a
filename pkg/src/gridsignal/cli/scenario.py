import hashlib
import json
import logging
import os
import tomllib

from ..approx import ApproxConfig
from ..comms import CommConfig
from ..errors import ConfigError
from ..errors import InvalidArgumentError
from ..learn import LearnConfig
from ..learn import RewardWeights
from ..network import RoadNetwork
from ..signal import ActuatedConfig
from ..signal import StaticSchedule
from ..sim import SimConfig
from ..train import TrainConfig

logger = logging.getLogger(__name__)


class NetworkConfig:
    """The size of the grid.

    Public attributes:

    int n - The number of intersections per side.
    float block_length - The distance between adjacent intersections,
        in meters.
    """

    FIELDS = ('n', 'block_length')

    PUBLISHED_FIELDS = ('n',)

    def __init__(self, n=5, block_length=200.0):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidArgumentError('n must be a positive integer', 'n')
        if not block_length > 0:
            raise InvalidArgumentError(
                'block_length must be positive', 'block_length')
        self.n = n
        self.block_length = float(block_length)

    def to_json(self):
        return {'n': self.n, 'block_length': self.block_length}


class Scenario:
    """A fully validated experiment configuration.

    Public attributes:

    int seed - The master seed.
    str controller - The default controller: one of ``CONTROLLERS``.
    str output_dir - The directory for output files.
    NetworkConfig network - The grid size.
    SimConfig sim - The simulation parameters.
    StaticSchedule static_schedule - The fixed-time plan.
    ActuatedConfig actuated - The actuated controller parameters.
    RewardWeights reward - The reward weights.
    LearnConfig learn - The learning parameters.
    ApproxConfig approx - The approximator parameters.
    TrainConfig train - The training parameters.
    CommConfig comm - The communication model parameters.
    """

    CONTROLLERS = ('static', 'actuated', 'threshold', 'learned')

    # The top-level keys other than sections
    TOP_LEVEL_FIELDS = ('seed', 'controller', 'output_dir')

    def __init__(
            self, seed=0, controller='static', output_dir='runs',
            network=None, sim=None, static_schedule=None, actuated=None,
            reward=None, learn=None, approx=None, train=None, comm=None):
        if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
            raise InvalidArgumentError(
                'seed must be a non-negative integer', 'seed')
        if controller not in Scenario.CONTROLLERS:
            raise InvalidArgumentError(
                'controller must be one of {:s}'.format(
                    ', '.join(Scenario.CONTROLLERS)),
                'controller')
        if not isinstance(output_dir, str) or not output_dir:
            raise InvalidArgumentError(
                'output_dir must be a non-empty string', 'output_dir')
        self.seed = seed
        self.controller = controller
        self.output_dir = output_dir
        self.network = network if network is not None else NetworkConfig()
        self.sim = sim if sim is not None else SimConfig()
        self.static_schedule = (
            static_schedule if static_schedule is not None
            else StaticSchedule())
        self.actuated = actuated if actuated is not None else ActuatedConfig()
        self.reward = reward if reward is not None else RewardWeights()
        self.learn = learn if learn is not None else LearnConfig()
        self.approx = approx if approx is not None else ApproxConfig()
        self.train = train if train is not None else TrainConfig()
        self.comm = comm if comm is not None else CommConfig()

    def build_network(self):
        """Return the ``RoadNetwork`` of the scenario."""
        return RoadNetwork.build_grid(
            self.network.n, self.network.block_length)

    def to_json(self):
        """Return the resolved configuration as a JSON-compatible dict."""
        signal = self.static_schedule.to_json()
        signal.update(self.actuated.to_json())
        return {
            'seed': self.seed,
            'controller': self.controller,
            'output_dir': self.output_dir,
            'network': self.network.to_json(),
            'sim': self.sim.to_json(),
            'signal': signal,
            'reward': self.reward.to_json(),
            'learn': self.learn.to_json(),
            'approx': self.approx.to_json(),
            'train': self.train.to_json(),
            'comm': self.comm.to_json(),
        }

    def config_hash(self):
        """Return the SHA-256 hex digest of the canonical configuration.

        The output directory is not part of the hash, since it does not
        affect results.
        """
        json_ = self.to_json()
        del json_['output_dir']
        canonical = json.dumps(json_, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode()).hexdigest()


# The sections of a scenario file, and the config classes their keys go to
_SECTIONS = {
    'network': (NetworkConfig,),
    'sim': (SimConfig,),
    'signal': (StaticSchedule, ActuatedConfig),
    'reward': (RewardWeights,),
    'learn': (LearnConfig,),
    'approx': (ApproxConfig,),
    'train': (TrainConfig,),
    'comm': (CommConfig,),
}


def _build(section, cls, values):
    """Return ``cls(**values)``, translating errors into ``ConfigError``."""
    for name in cls.FIELDS:
        if name not in values and name not in cls.PUBLISHED_FIELDS:
            logger.info(
                '%s.%s = %r: unpublished default', section, name,
                getattr(cls(), name))
    try:
        return cls(**values)
    except InvalidArgumentError as exception:
        field = exception.field if exception.field else '?'
        raise ConfigError(
            '{:s}.{:s}: {:s}'.format(section, field, str(exception))) from (
                exception)
    except TypeError as exception:
        raise ConfigError(
            '{:s}: {:s}'.format(section, str(exception))) from exception


def _parse_section(section, values):
    """Return the config objects of one scenario section."""
    if not isinstance(values, dict):
        raise ConfigError('{:s}: expected a table'.format(section))
    classes = _SECTIONS[section]
    known = set()
    for cls in classes:
        known.update(cls.FIELDS)
    for key in values:
        if key not in known:
            raise ConfigError(
                '{:s}.{:s}: unknown key'.format(section, key))
    return [
        _build(
            section, cls,
            {key: value for key, value in values.items()
             if key in cls.FIELDS})
        for cls in classes]


def parse_scenario(data):
    """Return the ``Scenario`` described by a parsed scenario file.

    Arguments:
        data (dict): The parsed TOML or JSON document.

    Raises:
        ConfigError: If a key is unknown or a value is invalid.
    """
    if not isinstance(data, dict):
        raise ConfigError('scenario: expected a table at the top level')
    for key in data:
        if key not in _SECTIONS and key not in Scenario.TOP_LEVEL_FIELDS:
            raise ConfigError('{:s}: unknown key'.format(key))
    sections = {}
    for section in _SECTIONS:
        sections[section] = _parse_section(section, data.get(section, {}))
    top_level = {
        key: data[key] for key in Scenario.TOP_LEVEL_FIELDS if key in data}
    try:
        return Scenario(
            network=sections['network'][0], sim=sections['sim'][0],
            static_schedule=sections['signal'][0],
            actuated=sections['signal'][1], reward=sections['reward'][0],
            learn=sections['learn'][0], approx=sections['approx'][0],
            train=sections['train'][0], comm=sections['comm'][0],
            **top_level)
    except InvalidArgumentError as exception:
        raise ConfigError(
            '{:s}: {:s}'.format(exception.field, str(exception))) from (
                exception)


def load_scenario(filename):
    """Load and validate a scenario file.

    Files ending in ``.json`` are parsed as JSON and all other files as
    TOML. An empty file is a valid scenario with every value at its
    default. We log every default that is not a published setting.

    Arguments:
        filename (str): The file.

    Returns:
        Scenario: The scenario.

    Raises:
        ConfigError: If the file is unreadable, does not parse, or holds
            an unknown key or an invalid value.
    """
    try:
        with open(filename, 'rb') as file:
            content = file.read()
    except OSError as exception:
        raise ConfigError(
            'scenario: unable to read {:s}: {:s}'.format(
                filename, str(exception))) from exception
    try:
        text = content.decode()
        if not text.strip():
            data = {}
        elif os.path.splitext(filename)[1].lower() == '.json':
            data = json.loads(text)
        else:
            data = tomllib.loads(text)
    except (UnicodeDecodeError, ValueError) as exception:
        raise ConfigError(
            'scenario: unable to parse {:s}: {:s}'.format(
                filename, str(exception))) from exception
    logger.info('Loaded scenario %s', filename)
    return parse_scenario(data)
