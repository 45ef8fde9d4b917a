from .krauss import KraussModel
from .microsim import Microsim
from .observation import LaneObservation
from .observation import MetricsRecord
from .sim_config import SimConfig
from .trace_writer import MetricsLog
from .trace_writer import SignalLog
from .trace_writer import TrajectoryLog
from .vehicle import Vehicle
from .world_state import WorldState

__all__ = [
    'KraussModel', 'LaneObservation', 'MetricsLog', 'MetricsRecord',
    'Microsim', 'SignalLog', 'SimConfig', 'TrajectoryLog', 'Vehicle',
    'WorldState']
