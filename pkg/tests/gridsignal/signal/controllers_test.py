import math
import unittest

from gridsignal.errors import InvalidArgumentError
from gridsignal.signal import ActuatedConfig
from gridsignal.signal import Phase
from gridsignal.signal import SignalState
from gridsignal.signal import StaticSchedule
from gridsignal.signal import actuated_controller
from gridsignal.signal import static_controller
from gridsignal.sim import LaneObservation


def lane_obs(halting=0, queue_length=0.0, approach_time=math.inf):
    """Return a ``LaneObservation`` with the given detector values."""
    return LaneObservation(
        0, halting=halting, queue_length=queue_length,
        approach_time=approach_time)


class StaticControllerTest(unittest.TestCase):
    """Tests ``static_controller``."""

    def test_examples(self):
        """Test ``static_controller`` on simple examples."""
        schedule = StaticSchedule(30, 30)
        self.assertEqual(
            SignalState.SWITCH,
            static_controller(SignalState(0, Phase.GRGR, 30.0), schedule))
        self.assertEqual(
            SignalState.HOLD,
            static_controller(SignalState(0, Phase.GRGR, 29.0), schedule))
        self.assertEqual(
            SignalState.HOLD,
            static_controller(
                SignalState(0, Phase.YRYR, 1.0, Phase.RGRG), schedule))

    def test_cycle(self):
        """Test that the phase dwell times of a cycle sum to the cycle time.
        """
        for green_ns, green_ew in ((30, 30), (10, 25)):
            schedule = StaticSchedule(green_ns, green_ew)
            self.assertEqual(
                green_ns + green_ew + 4, schedule.cycle_time())
            sig = SignalState(0)
            dwells = []
            for _ in range(500):
                result = sig.advance(static_controller(sig, schedule))
                if result.phase != sig.phase:
                    if sig.phase.is_yellow:
                        dwells.append(sig.elapsed + 1)
                    else:
                        dwells.append(sig.elapsed)
                sig = result
            self.assertGreater(len(dwells), 12)
            for start in range(0, len(dwells) - 3, 4):
                self.assertEqual(
                    [green_ns, 2, green_ew, 2], dwells[start:start + 4])
                self.assertEqual(
                    schedule.cycle_time(), sum(dwells[start:start + 4]))

    def test_errors(self):
        """Test the errors ``StaticSchedule`` raises."""
        with self.assertRaises(InvalidArgumentError):
            StaticSchedule(green_ns=2)


class ActuatedControllerTest(unittest.TestCase):
    """Tests ``actuated_controller``."""

    def setUp(self):
        self._cfg = ActuatedConfig(
            min_green=3, max_green=90, gap_threshold=3)
        self._sig = SignalState(0, Phase.GRGR, 10.0)

    def test_continuous_stream(self):
        """Test holding while the served lanes carry a stream."""
        obs = [
            lane_obs(approach_time=1.0), lane_obs(), lane_obs(), lane_obs()]
        self.assertEqual(
            SignalState.HOLD, actuated_controller(self._sig, obs, self._cfg))
        obs[0] = lane_obs(halting=2, approach_time=math.inf)
        self.assertEqual(
            SignalState.HOLD, actuated_controller(self._sig, obs, self._cfg))

    def test_gap(self):
        """Test switching once a sufficient gap appears."""
        obs = [
            lane_obs(approach_time=5.0), lane_obs(approach_time=1.0),
            lane_obs(), lane_obs(halting=3)]
        self.assertEqual(
            SignalState.SWITCH,
            actuated_controller(self._sig, obs, self._cfg))

    def test_max_green(self):
        """Test switching at ``max_green`` regardless of the stream."""
        obs = [lane_obs(approach_time=1.0)] * 4
        sig = SignalState(0, Phase.GRGR, 90.0)
        self.assertEqual(
            SignalState.SWITCH, actuated_controller(sig, obs, self._cfg))

    def test_min_green_and_yellow(self):
        """Test holding before ``min_green`` and during yellow."""
        obs = [lane_obs()] * 4
        cfg = ActuatedConfig(min_green=5)
        self.assertEqual(
            SignalState.HOLD,
            actuated_controller(SignalState(0, Phase.RGRG, 4.0), obs, cfg))
        self.assertEqual(
            SignalState.SWITCH,
            actuated_controller(SignalState(0, Phase.RGRG, 5.0), obs, cfg))
        self.assertEqual(
            SignalState.HOLD,
            actuated_controller(
                SignalState(0, Phase.RYRY, 1.0, Phase.GRGR), obs, cfg))

    def test_queue_threshold(self):
        """Test the queue threshold toward the more jammed direction."""
        cfg = ActuatedConfig(queue_threshold=30.0)
        obs = [
            lane_obs(halting=2, queue_length=20.0), lane_obs(),
            lane_obs(), lane_obs(halting=6, queue_length=45.0)]
        self.assertEqual(
            SignalState.SWITCH, actuated_controller(self._sig, obs, cfg))
        self.assertEqual(
            SignalState.HOLD, actuated_controller(self._sig, obs, self._cfg))

        obs[0] = lane_obs(halting=8, queue_length=60.0)
        self.assertEqual(
            SignalState.HOLD, actuated_controller(self._sig, obs, cfg))
        obs[0] = lane_obs(halting=2, queue_length=20.0)
        obs[3] = lane_obs(halting=3, queue_length=25.0)
        self.assertEqual(
            SignalState.HOLD, actuated_controller(self._sig, obs, cfg))

    def test_errors(self):
        """Test the errors ``ActuatedConfig`` raises."""
        for kwargs in (
                {'min_green': 2}, {'min_green': 10, 'max_green': 5},
                {'gap_threshold': 0}, {'queue_threshold': -1}):
            with self.assertRaises(InvalidArgumentError):
                ActuatedConfig(**kwargs)
