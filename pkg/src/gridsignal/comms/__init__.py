from .comm_config import CommConfig
from .delay_model import DelayReport
from .delay_model import DelaySample
from .delay_model import DelayStatistics
from .delay_model import estimate_active_vehicles
from .delay_model import laplace_delays
from .delay_model import read_vehicle_counts
from .delay_model import sample_delays
from .delay_model import traffic_volume

__all__ = [
    'CommConfig', 'DelayReport', 'DelaySample', 'DelayStatistics',
    'estimate_active_vehicles', 'laplace_delays', 'read_vehicle_counts',
    'sample_delays', 'traffic_volume']
