import unittest

import numpy as np

from gridsignal.errors import InvalidArgumentError
from gridsignal.signal import Phase
from gridsignal.signal import SignalState
from gridsignal.signal import advance_phase


class SignalStateTest(unittest.TestCase):
    """Tests the ``SignalState`` class."""

    def test_phase_cycle(self):
        """Test the ``Phase`` cycle."""
        self.assertEqual(Phase.YRYR, Phase.GRGR.next())
        self.assertEqual(Phase.RGRG, Phase.YRYR.next())
        self.assertEqual(Phase.RYRY, Phase.RGRG.next())
        self.assertEqual(Phase.GRGR, Phase.RYRY.next())
        self.assertEqual(
            [0, 1, 2, 3], [phase.index for phase in Phase])
        self.assertEqual(Phase.RGRG, Phase.from_index(2))
        self.assertEqual('G', Phase.GRGR.indication(2))
        self.assertEqual('r', Phase.GRGR.indication(3))

    def test_examples(self):
        """Test ``advance_phase`` on simple examples."""
        self.assertEqual(
            SignalState(0, Phase.YRYR, 0.0, Phase.RGRG),
            advance_phase(SignalState(0, Phase.GRGR, 5.0), SignalState.SWITCH))
        self.assertEqual(
            SignalState(0, Phase.GRGR, 2.0),
            advance_phase(SignalState(0, Phase.GRGR, 1.0), SignalState.SWITCH))
        self.assertEqual(
            SignalState(0, Phase.RGRG, 0.0),
            advance_phase(
                SignalState(0, Phase.YRYR, 1.0, Phase.RGRG),
                SignalState.HOLD))
        self.assertEqual(
            SignalState(0, Phase.YRYR, 1.0, Phase.RGRG),
            advance_phase(
                SignalState(0, Phase.YRYR, 0.0, Phase.RGRG),
                SignalState.SWITCH))
        self.assertEqual(
            SignalState(0, Phase.GRGR, 6.0),
            advance_phase(SignalState(0, Phase.GRGR, 5.0), SignalState.HOLD))
        self.assertEqual(
            SignalState(3, Phase.RYRY, 0.0, Phase.GRGR),
            advance_phase(SignalState(3, Phase.RGRG, 3.0), SignalState.SWITCH))

    def test_exhaustive(self):
        """Test every combination of phase, elapsed time and action."""
        for phase in Phase:
            for elapsed in range(11):
                for action in (SignalState.HOLD, SignalState.SWITCH):
                    if phase.is_yellow:
                        if elapsed >= 2:
                            continue
                        sig = SignalState(
                            1, phase, float(elapsed), phase.next())
                    else:
                        sig = SignalState(1, phase, float(elapsed))
                    result = sig.advance(action)
                    self.assertEqual(1, result.intersection)
                    if phase.is_yellow:
                        if elapsed + 1 >= 2:
                            expected = SignalState(1, phase.next(), 0.0)
                        else:
                            expected = SignalState(
                                1, phase, elapsed + 1.0, phase.next())
                    elif action == SignalState.SWITCH and elapsed >= 3:
                        expected = SignalState(
                            1, phase.next(), 0.0, phase.next().next())
                    else:
                        expected = SignalState(1, phase, elapsed + 1.0)
                    self.assertEqual(expected, result)
                    self.assertEqual(
                        action == SignalState.SWITCH and
                        result.phase != phase and phase.is_green,
                        sig.can_switch() and action == SignalState.SWITCH)

    def test_adversarial_actions(self):
        """Test dwell times under random action streams."""
        rng = np.random.default_rng(5)
        for dt in (1.0, 0.5):
            sig = SignalState(0)
            dwell = 0.0
            changes = 0
            for action in rng.integers(0, 2, 5000):
                result = sig.advance(int(action), dt)
                dwell += dt
                if result.phase != sig.phase:
                    changes += 1
                    if sig.phase.is_yellow:
                        self.assertAlmostEqual(2, dwell)
                    else:
                        self.assertGreaterEqual(dwell, 3 + dt - 1e-9)
                    self.assertEqual(sig.phase.next(), result.phase)
                    dwell = 0.0
                value = result.phase.value
                self.assertFalse('G' in value[0::2] and 'G' in value[1::2])
                sig = result
            self.assertGreater(changes, 100)

    def test_errors(self):
        """Test the errors ``SignalState.advance`` raises."""
        with self.assertRaises(InvalidArgumentError):
            SignalState(0).advance(SignalState.HOLD, 0)
