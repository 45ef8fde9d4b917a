import copy
import logging

import numpy as np
import torch
from torch import nn
import torch.nn.functional as F

from ..errors import CheckpointError
from ..errors import InvalidArgumentError
from ..errors import NumericFault
from ..learn import td_targets
from .checkpoint_io import CheckpointIO
from .value_approximator import ValueApproximator

logger = logging.getLogger(__name__)


class QNetwork(nn.Module):
    """A fully connected network with rectifier activations.

    It maps an input vector to one value per local action.
    """

    def __init__(self, input_dim, hidden=(256, 256), num_actions=2):
        super().__init__()
        layers = []
        size = input_dim
        for hidden_size in hidden:
            layers.append(nn.Linear(size, hidden_size))
            layers.append(nn.ReLU())
            size = hidden_size
        layers.append(nn.Linear(size, num_actions))
        self.layers = nn.Sequential(*layers)

    def forward(self, x):
        return self.layers(x)


class NeuralQ(ValueApproximator):
    """A neural per-signal Q-function with a target network.

    Updates take one Adam step on the mean squared error between the
    values of the taken actions and targets computed with the target
    network. The target network is a copy of the live network that is
    refreshed every ``target_update`` updates. Action selection uses the
    live network.

    Public attributes:

    int updates - The number of gradient updates so far.
    """

    KIND = 'neural'

    def __init__(self, featurizer, config, dtype=torch.float32):
        """Initialize a new ``NeuralQ``.

        Arguments:
            featurizer (Featurizer): Maps states to input vectors.
            config (ApproxConfig): The parameters. We seed the initial
                weights with ``config.init_seed``.
            dtype (torch.dtype): The floating point type of the weights.
        """
        self.featurizer = featurizer
        self._config = config
        self._dtype = dtype
        with torch.random.fork_rng():
            torch.manual_seed(config.init_seed)
            self.network = QNetwork(
                featurizer.input_dim, config.hidden).to(dtype)
        self.target_network = copy.deepcopy(self.network)
        self.target_network.requires_grad_(False)
        self.optimizer = torch.optim.Adam(
            self.network.parameters(), lr=config.learning_rate,
            eps=config.adam_eps)
        self.updates = 0

    def _tensor(self, features):
        return torch.as_tensor(features, dtype=self._dtype)

    def _check_finite(self, values, what):
        if not np.all(np.isfinite(values)):
            logger.error('Non-finite %s after %d updates', what, self.updates)
            raise NumericFault(
                'Non-finite {:s} after {:d} updates'.format(
                    what, self.updates))

    def q_values(self, state, agent):
        return self.q_values_batch(state, [agent])[0]

    def q_values_batch(self, state, agents):
        features = self.featurizer.features_batch(
            [state] * len(agents), agents)
        with torch.no_grad():
            values = self.network(self._tensor(features)).double().numpy()
        self._check_finite(values, 'Q values')
        return values

    def target_values(self, states, agents):
        """Return the target network's values for a batch of inputs."""
        features = self.featurizer.features_batch(states, agents)
        with torch.no_grad():
            return self.target_network(
                self._tensor(features)).double().numpy()

    def batch_update(self, transitions, cfg):
        if not transitions:
            raise InvalidArgumentError('The batch is empty', 'transitions')
        agents = [transition.agent for transition in transitions]
        features = self._tensor(self.featurizer.features_batch(
            [transition.state for transition in transitions], agents))
        next_values = self.target_values(
            [transition.next_state for transition in transitions], agents)
        self._check_finite(next_values, 'target network values')
        targets = td_targets(
            [transition.reward for transition in transitions], next_values,
            [transition.next_action for transition in transitions],
            [transition.terminal for transition in transitions], cfg)
        actions = torch.as_tensor(
            [transition.action for transition in transitions],
            dtype=torch.int64)

        predictions = self.network(features).gather(
            1, actions.unsqueeze(1)).squeeze(1)
        loss = F.mse_loss(predictions, self._tensor(targets))
        loss_value = loss.item()
        self._check_finite(loss_value, 'loss')
        self.optimizer.zero_grad()
        loss.backward()
        for name, param in self.network.named_parameters():
            if not torch.all(torch.isfinite(param.grad)):
                logger.error(
                    'Non-finite gradient of %s (loss %g, update %d)', name,
                    loss_value, self.updates)
                raise NumericFault(
                    'Non-finite gradient of {:s} at update {:d}'.format(
                        name, self.updates))
        self.optimizer.step()
        self.updates += 1
        if self.updates % self._config.target_update == 0:
            self.sync_target()
        return loss_value

    def sync_target(self):
        """Copy the live network into the target network."""
        self.target_network.load_state_dict(self.network.state_dict())

    def scale_learning_rate(self, multiplier):
        if not multiplier > 0:
            raise InvalidArgumentError(
                'The multiplier must be positive', 'multiplier')
        for group in self.optimizer.param_groups:
            group['lr'] *= multiplier

    @property
    def learning_rate(self):
        return self.optimizer.param_groups[0]['lr']

    @staticmethod
    def _write_state(output, module):
        state = module.state_dict()
        CheckpointIO.write_int(output, len(state))
        for name, tensor in state.items():
            CheckpointIO.write_str(output, name)
            CheckpointIO.write_array(
                output, tensor.detach().cpu().double().numpy())

    def _read_state(self, input_, module):
        expected = module.state_dict()
        count = CheckpointIO.read_int(input_)
        if count != len(expected):
            raise CheckpointError(
                'Checkpoint has {:d} tensors, expected {:d}'.format(
                    count, len(expected)))
        state = {}
        for _ in range(count):
            name = CheckpointIO.read_str(input_)
            array = CheckpointIO.read_array(input_)
            if name not in expected:
                raise CheckpointError(
                    'Unexpected tensor {!r} in checkpoint'.format(name))
            if tuple(expected[name].shape) != array.shape:
                raise CheckpointError(
                    'Tensor {!r} has shape {!r}, expected {!r}'.format(
                        name, array.shape, tuple(expected[name].shape)))
            state[name] = torch.from_numpy(array).to(self._dtype)
        return state

    def write_params(self, output):
        CheckpointIO.write_int(output, self.featurizer.input_dim)
        CheckpointIO.write_long(output, self.updates)
        NeuralQ._write_state(output, self.network)
        NeuralQ._write_state(output, self.target_network)

    def read_params(self, input_):
        input_dim = CheckpointIO.read_int(input_)
        if input_dim != self.featurizer.input_dim:
            raise CheckpointError(
                'Checkpoint input dimension {:d} does not match {:d}'.format(
                    input_dim, self.featurizer.input_dim))
        updates = CheckpointIO.read_long(input_)
        live = self._read_state(input_, self.network)
        target = self._read_state(input_, self.target_network)
        self.network.load_state_dict(live)
        self.target_network.load_state_dict(target)
        self.updates = updates
