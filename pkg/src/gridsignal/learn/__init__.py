from .action_selection import greedy_actions
from .action_selection import joint_q_values
from .action_selection import select_joint_action
from .global_observation import GlobalObservation
from .global_observation import assemble_state
from .learn_config import LearnConfig
from .learn_config import LinearSchedule
from .per_signal_q import PerSignalQ
from .q_update import q_update
from .q_update import td_targets
from .replay_buffer import ReplayBuffer
from .reward import PolicyGroup
from .reward import RewardWeights
from .reward import reward_per_signal
from .reward import reward_shared
from .reward import rewards_per_signal
from .reward import signal_group
from .transition import Transition

__all__ = [
    'GlobalObservation', 'LearnConfig', 'LinearSchedule', 'PerSignalQ',
    'PolicyGroup', 'ReplayBuffer', 'RewardWeights', 'Transition',
    'assemble_state', 'greedy_actions', 'joint_q_values', 'q_update',
    'reward_per_signal', 'reward_shared', 'rewards_per_signal',
    'select_joint_action', 'signal_group', 'td_targets']
