from .approx_config import ApproxConfig
from .checkpoint_io import CheckpointIO
from .checkpoint_io import load_checkpoint
from .checkpoint_io import save_checkpoint
from .featurizer import Discretizer
from .featurizer import Featurizer
from .neural_q import NeuralQ
from .neural_q import QNetwork
from .tabular_q import TabularQ
from .value_approximator import ValueApproximator

__all__ = [
    'ApproxConfig', 'CheckpointIO', 'Discretizer', 'Featurizer', 'NeuralQ',
    'QNetwork', 'TabularQ', 'ValueApproximator', 'load_checkpoint',
    'save_checkpoint']
