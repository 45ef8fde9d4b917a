from .decentralized import CountingApproximator
from .decentralized import brute_force_joint_action
from .decentralized import enumerate_joint_action
from .decentralized import greedy_joint_policy
from .decentralized import learn_decentralized
from .decentralized import linear_fit
from .decentralized import policy_gap
from .decentralized import selection_costs
from .finite_mdp import FiniteMDP
from .finite_mdp import factored_mdp
from .finite_mdp import joint_actions
from .finite_mdp import joint_index
from .finite_mdp import random_mdp
from .solvers import PolicyEvaluation
from .solvers import decomposition_check
from .solvers import evaluate_policy
from .solvers import policy_matrix
from .solvers import value_iterate
from .verification import CheckResult
from .verification import VerificationReport
from .verification import check_convergence
from .verification import check_decomposition
from .verification import check_factored_argmax
from .verification import check_reward_partition
from .verification import check_signal_machine
from .verification import run_verification

__all__ = [
    'CheckResult', 'CountingApproximator', 'FiniteMDP', 'PolicyEvaluation',
    'VerificationReport', 'brute_force_joint_action', 'check_convergence',
    'check_decomposition', 'check_factored_argmax', 'check_reward_partition',
    'check_signal_machine', 'decomposition_check', 'enumerate_joint_action',
    'evaluate_policy', 'factored_mdp', 'greedy_joint_policy',
    'joint_actions', 'joint_index', 'learn_decentralized', 'linear_fit',
    'policy_gap', 'policy_matrix', 'random_mdp', 'run_verification',
    'selection_costs', 'value_iterate']
