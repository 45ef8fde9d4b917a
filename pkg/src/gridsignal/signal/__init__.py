from .controllers import ActuatedConfig
from .controllers import StaticSchedule
from .controllers import actuated_controller
from .controllers import static_controller
from .phase import Phase
from .signal_state import SignalState
from .signal_state import advance_phase

__all__ = [
    'ActuatedConfig', 'Phase', 'SignalState', 'StaticSchedule',
    'actuated_controller', 'advance_phase', 'static_controller']
