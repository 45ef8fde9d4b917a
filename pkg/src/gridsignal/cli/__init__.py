from .cli import Cli
from .cli import gridsignal_cli
from .run_manifest import RunManifest
from .scenario import NetworkConfig
from .scenario import Scenario
from .scenario import load_scenario
from .scenario import parse_scenario

__all__ = [
    'Cli', 'NetworkConfig', 'RunManifest', 'Scenario', 'gridsignal_cli',
    'load_scenario', 'parse_scenario']
