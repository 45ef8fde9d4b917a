import logging

import numpy as np

from ..errors import NumericFault

logger = logging.getLogger(__name__)


def td_targets(rewards, next_values, next_actions, terminal, cfg):
    """Return the normalized temporal-difference targets of a batch.

    The target of a transition is ``(1 - gamma) * R + gamma * Q(s', a')``
    in ``'sarsa'`` mode and ``(1 - gamma) * R + gamma * max_a Q(s', a)``
    in ``'qmax'`` mode. Terminal transitions drop the second term.

    Arguments:
        rewards (numpy.ndarray): The rewards, one per transition.
        next_values (numpy.ndarray): An ``n x 2`` array of the values of
            the next states.
        next_actions (numpy.ndarray): The next actions.
        terminal (numpy.ndarray): Whether each transition is terminal.
        cfg (LearnConfig): The learning parameters.

    Returns:
        numpy.ndarray: The targets.

    Raises:
        NumericFault: If an input or a target is not finite.
    """
    rewards = np.asarray(rewards, dtype=np.float64)
    next_values = np.asarray(next_values, dtype=np.float64)
    if not np.all(np.isfinite(rewards)):
        logger.error('Non-finite rewards: %r', rewards)
        raise NumericFault('Non-finite reward in a transition batch')
    if cfg.target_mode == 'sarsa':
        bootstrap = next_values[
            np.arange(len(next_values)), np.asarray(next_actions)]
    else:
        bootstrap = np.max(next_values, axis=1)
    bootstrap = np.where(np.asarray(terminal, dtype=bool), 0.0, bootstrap)
    targets = (1 - cfg.gamma) * rewards + cfg.gamma * bootstrap
    if not np.all(np.isfinite(targets)):
        logger.error('Non-finite targets: %r', targets)
        raise NumericFault(
            'Non-finite target (max |Q(s\')| = {:g})'.format(
                float(np.max(np.abs(next_values)))))
    return targets


def q_update(q_c, transition, cfg):
    """Apply the per-signal update rule to one transition.

    For a tabular approximator the new value is
    ``(1 - alpha) * Q_c(s, a_c) + alpha * T`` with the target ``T`` of
    ``td_targets``; a neural approximator takes one gradient step on
    ``(T - Q_c(s, a_c))^2``.

    Arguments:
        q_c (PerSignalQ): The Q-function of the transition's agent.
        transition (Transition): The transition.
        cfg (LearnConfig): The learning parameters.

    Returns:
        PerSignalQ: ``q_c``.
    """
    q_c.approximator.batch_update([transition], cfg)
    return q_c
