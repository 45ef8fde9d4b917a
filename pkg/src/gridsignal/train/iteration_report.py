from ..sim.trace_writer import CsvLog


class IterationReport:
    """The summary of one training iteration.

    Public attributes:

    int iteration - The iteration index, starting at 1.
    int steps - The number of environment steps so far.
    float reward_max - The largest rollout reward of the iteration.
    float reward_mean - The mean rollout reward of the iteration.
    float reward_min - The smallest rollout reward of the iteration.
    dict<str, float> group_rewards - A map from the name of each policy
        group to the mean over the rollouts of the group's reward divided
        by the number of agents in the group.
    dict<str, int> group_sizes - The number of agents in each group.
    float seconds - The wall-clock duration of the iteration.
    """

    def __init__(
            self, iteration, steps, reward_max, reward_mean, reward_min,
            group_rewards, group_sizes, seconds):
        self.iteration = iteration
        self.steps = steps
        self.reward_max = reward_max
        self.reward_mean = reward_mean
        self.reward_min = reward_min
        self.group_rewards = group_rewards
        self.group_sizes = group_sizes
        self.seconds = seconds

    @staticmethod
    def header(groups):
        """Return the CSV header of reports with the given group names."""
        return (
            ('iteration', 'steps', 'reward_max', 'reward_mean',
             'reward_min') +
            tuple('{:s}_reward_per_agent'.format(group) for group in groups) +
            ('seconds',))

    def to_row(self):
        return (
            [self.iteration, self.steps, self.reward_max, self.reward_mean,
             self.reward_min] +
            [self.group_rewards[group] for group in self.group_rewards] +
            [round(self.seconds, 3)])

    def __repr__(self):
        return (
            'IterationReport({:d}, steps={:d}, reward={:.2f} '
            '[{:.2f}, {:.2f}])'.format(
                self.iteration, self.steps, self.reward_mean,
                self.reward_min, self.reward_max))


class IterationReportLog(CsvLog):
    """A CSV file of ``IterationReport`` objects, one row per iteration."""

    def __init__(self, filename, groups):
        self.HEADER = IterationReport.header(groups)
        super().__init__(filename)

    def write(self, report):
        self.write_row(report.to_row())
        self._file.flush()
