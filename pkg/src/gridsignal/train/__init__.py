from .agents import assign_policies
from .agents import build_agents
from .agents import group_members
from .environment import TrafficEnvironment
from .evaluation import EvaluationSummary
from .evaluation import MetricSummary
from .evaluation import episode_means
from .evaluation import evaluate
from .inter_es import IdentityHook
from .inter_es import InterEsHook
from .inter_es import PlateauHook
from .iteration_report import IterationReport
from .iteration_report import IterationReportLog
from .policies import ActuatedPolicy
from .policies import LearnedPolicy
from .policies import Policy
from .policies import StaticPolicy
from .policies import ThresholdPolicy
from .rollout import RolloutResult
from .rollout import run_rollout
from .train_config import TrainConfig
from .trainer import Trainer
from .trainer import rollout_seed

__all__ = [
    'ActuatedPolicy', 'EvaluationSummary', 'IdentityHook', 'InterEsHook',
    'IterationReport', 'IterationReportLog', 'LearnedPolicy',
    'MetricSummary', 'PlateauHook', 'Policy', 'RolloutResult',
    'StaticPolicy', 'ThresholdPolicy', 'TrafficEnvironment', 'TrainConfig',
    'Trainer', 'assign_policies', 'build_agents', 'episode_means',
    'evaluate', 'group_members', 'rollout_seed', 'run_rollout']
