import datetime
import json
import platform
import time

import numpy as np
import PIL
import torch

from .. import __version__


class RunManifest:
    """The record of one command-line run, written as JSON.

    Together with the seed, the resolved scenario suffices to reproduce
    every output of the run except for wall-clock fields.
    """

    def __init__(self, command, scenario=None, seed=None):
        self.command = command
        self.scenario = scenario
        self.seed = seed
        self.outputs = []
        self.extra = {}
        self.started_at = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
        self._start = time.monotonic()

    def add_output(self, filename):
        self.outputs.append(filename)

    @staticmethod
    def versions():
        return {
            'python': platform.python_version(),
            'numpy': np.__version__,
            'torch': torch.__version__,
            'Pillow': PIL.__version__,
            'gridsignal': __version__,
        }

    def to_json(self):
        json_ = {
            'command': self.command,
            'scenario': (
                self.scenario.to_json() if self.scenario is not None
                else None),
            'config_hash': (
                self.scenario.config_hash() if self.scenario is not None
                else None),
            'seed': self.seed,
            'versions': RunManifest.versions(),
            'outputs': list(self.outputs),
            'started_at': self.started_at,
            'seconds': round(time.monotonic() - self._start, 3),
        }
        json_.update(self.extra)
        return json_

    def write(self, filename):
        with open(filename, 'w') as file:
            json.dump(self.to_json(), file, indent=4)
            file.write('\n')
