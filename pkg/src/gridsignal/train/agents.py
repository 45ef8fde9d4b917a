from ..approx import Discretizer
from ..approx import Featurizer
from ..approx import NeuralQ
from ..approx import TabularQ
from ..learn import PerSignalQ
from ..learn import PolicyGroup
from ..learn import signal_group


def assign_policies(net, mode):
    """Return the policy group of every intersection.

    In ``'shared'`` mode every intersection belongs to the shared group.
    In ``'multi'`` mode interior intersections belong to the central
    group and boundary intersections to the edge group.

    Arguments:
        net (RoadNetwork): The network.
        mode (str): ``'shared'`` or ``'multi'``.

    Returns:
        dict<int, PolicyGroup>: A map from intersection IDs to groups.
    """
    return {
        c: signal_group(net, c, mode) for c in range(net.num_intersections)}


def group_members(assignment):
    """Return the intersection IDs of each non-empty policy group.

    Arguments:
        assignment (dict<int, PolicyGroup>): The result of
            ``assign_policies``.

    Returns:
        dict<PolicyGroup, list<int>>: The members of each group, in
            increasing order, with the groups in declaration order.
    """
    members = {}
    for group in PolicyGroup:
        ids = sorted(c for c, g in assignment.items() if g == group)
        if ids:
            members[group] = ids
    return members


def build_agents(net, sim_config, approx_config, mode):
    """Create the per-signal Q-functions of a network.

    The agents of a policy group share one approximator.

    Arguments:
        net (RoadNetwork): The network.
        sim_config (SimConfig): The simulation parameters.
        approx_config (ApproxConfig): The approximator parameters.
        mode (str): ``'shared'`` or ``'multi'``.

    Returns:
        tuple<list<PerSignalQ>, dict<str, ValueApproximator>>: The agents,
            indexed by intersection ID, and a map from the name of each
            policy group to its approximator.
    """
    assignment = assign_policies(net, mode)
    approximators = {}
    for group, members in group_members(assignment).items():
        if approx_config.kind == 'neural':
            featurizer = Featurizer(
                net, sim_config.v_max, members,
                approx_config.observation_mode)
            approximator = NeuralQ(featurizer, approx_config)
        else:
            approximator = TabularQ(
                Discretizer(
                    net, sim_config.v_max, approx_config.halting_cap,
                    approx_config.speed_bins,
                    approx_config.observation_mode))
        approximators[group.value] = approximator
    qs = [
        PerSignalQ(c, approximators[assignment[c].value], assignment[c])
        for c in range(net.num_intersections)]
    return qs, approximators
