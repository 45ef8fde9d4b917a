import numpy as np

from .rollout import run_rollout


class MetricSummary:
    """The dispersion of one metric over evaluation episodes.

    Public attributes:

    float mean - The mean of the episode values.
    float std - The population standard deviation.
    float mad - The median absolute deviation from the median.
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=np.float64)
        self.mean = float(np.mean(values))
        self.std = float(np.std(values))
        self.mad = float(np.median(np.abs(values - np.median(values))))

    def __repr__(self):
        return '{:.3f} +/- {:.3f}'.format(self.mean, self.mad)


class EvaluationSummary:
    """Traffic metrics of a controller, aggregated over episodes.

    Each episode contributes the mean of each metric over its steps.

    Public attributes:

    str controller - The controller name.
    dict<str, list<float>> episodes - A map from each metric name to
        its per-episode values.
    dict<str, MetricSummary> metrics - A map from each metric name to
        its summary, in ``METRICS`` order.
    """

    # The metrics we report, in report column order: halting vehicles,
    # queue time (s), queue length (m) and speed (m/s)
    METRICS = ('halting', 'queue_time', 'queue_length', 'speed')

    # The CSV header of to_rows()
    HEADER = ('controller', 'metric', 'mean', 'std', 'mad')

    def __init__(self, controller, episodes):
        self.controller = controller
        self.episodes = episodes
        self.metrics = {
            name: MetricSummary(episodes[name])
            for name in EvaluationSummary.METRICS}

    def to_rows(self):
        return [
            [self.controller, name, summary.mean, summary.std, summary.mad]
            for name, summary in self.metrics.items()]

    def is_clearly_lower(self, other, metric='halting'):
        """Return whether this controller's metric is significantly lower.

        The difference is significant if the intervals mean +/- MAD of
        the two controllers do not overlap.
        """
        mine = self.metrics[metric]
        theirs = other.metrics[metric]
        return mine.mean + mine.mad < theirs.mean - theirs.mad


def episode_means(metrics):
    """Return the mean of each reported metric over one episode.

    Steps without vehicles have no speed and are left out of the speed
    mean.
    """
    means = {}
    for name in EvaluationSummary.METRICS:
        values = [
            getattr(record, name) for record in metrics
            if getattr(record, name) is not None]
        means[name] = float(np.mean(values)) if values else 0.0
    return means


def evaluate(env, policy, episodes, length, seed):
    """Replay a controller and summarize its traffic metrics.

    Learned controllers should have an exploration rate of 0, so that
    the replay is greedy.

    Arguments:
        env (TrafficEnvironment): The environment.
        policy (Policy): The controller.
        episodes (int): The number of episodes.
        length (int): The number of steps per episode.
        seed (int): The seed. Episode ``i`` uses the same inflow as
            episode ``i`` of any other evaluation with this seed.

    Returns:
        EvaluationSummary: The summary.
    """
    values = {name: [] for name in EvaluationSummary.METRICS}
    for episode in range(episodes):
        episode_seed = int(
            np.random.SeedSequence([seed, 2, episode]).generate_state(1)[0])
        rng = np.random.default_rng(episode_seed)
        result = run_rollout(env, episode_seed, policy, length, rng)
        for name, value in episode_means(result.metrics).items():
            values[name].append(value)
    return EvaluationSummary(policy.NAME, values)
