import numpy as np

from ..learn import Transition


class RolloutResult:
    """The outcome of one rollout.

    Public attributes:

    float reward - The sum of the per-signal rewards over all steps and
        signals.
    dict<int, list<Transition>> transitions - A map from each
        intersection ID to the agent's transitions, in step order.
    list<MetricsRecord> metrics - The metrics after each step.
    numpy.ndarray signal_rewards - The sum of the rewards of each
        signal, indexed by intersection ID.
    """

    def __init__(self, reward, transitions, metrics, signal_rewards):
        self.reward = reward
        self.transitions = transitions
        self.metrics = metrics
        self.signal_rewards = signal_rewards


def run_rollout(env, seed, policy, length, rng, on_step=None):
    """Run one episode of ``length`` steps from an empty network.

    Each step observes the state, selects the joint action, advances the
    signals and the vehicles, and computes the rewards. The transition
    of a step is complete once the action of the following step is
    known.

    Arguments:
        env (TrafficEnvironment): The environment. We reset it.
        seed (int): The seed of the inflow process.
        policy (Policy): The controller.
        length (int): The number of steps.
        rng (numpy.random.Generator): The random number generator of the
            controller.
        on_step (callable): A function we call after every step with the
            list of the step's transitions, in intersection order. It
            may change the policy, e.g. its exploration rate, before the
            next action is selected.

    Returns:
        RolloutResult: The result.

    Raises:
        SimulationFault: If the dynamics break an invariant.
    """
    num_signals = env.net.num_intersections
    state = env.reset(seed)
    actions = policy.actions(env, rng)
    transitions = {c: [] for c in range(num_signals)}
    metrics = []
    signal_rewards = np.zeros(num_signals)
    for _ in range(length):
        next_state, rewards = env.step(actions)
        metrics.append(env.metrics)
        signal_rewards += rewards
        next_actions = policy.actions(env, rng)
        step_transitions = [
            Transition(
                c, state, int(actions[c]), float(rewards[c]), next_state,
                int(next_actions[c]))
            for c in range(num_signals)]
        for transition in step_transitions:
            transitions[transition.agent].append(transition)
        if on_step is not None:
            on_step(step_transitions)
        state = next_state
        actions = next_actions
    return RolloutResult(
        float(np.sum(signal_rewards)), transitions, metrics, signal_rewards)
