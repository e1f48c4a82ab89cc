# This code is part of rsdp.
#
# (C) Copyright The rsdp Developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
# pylint: disable=invalid-name

"""Tests for learner_state.py."""

import json
import os
import tempfile

import numpy as np
from ddt import ddt, data

from rsdp.exceptions import InvalidParameterError, ValidationError
from rsdp.learners import (
    LearnerConfig,
    LearnerState,
    confidence_radii,
    exact_radii,
    good_event_holds,
    load_count_snapshot,
    optimism_radius,
    sample_count_snapshot,
    save_count_snapshot,
)
from rsdp.mdp import Policy, Trajectory, TrajectoryStep, episode_rng, simulate_episode

from ..common import RSDPTestCase, random_mdp, slow_test


class TestLearnerConfig(RSDPTestCase):
    """Tests for LearnerConfig."""

    def setUp(self):
        self.cfg = LearnerConfig(-1.1, 0.005, 5, 5, 5, 2000)

    def test_iota(self):
        """Both log factors."""
        self.assertEqual(self.cfg.total_steps, 10000)
        self.assertAlmostEqual(self.cfg.iota, np.log(2 * 5 * 5 * 10000 / 0.005))
        cfg = LearnerConfig(-1.1, 0.005, 5, 5, 5, 2000, iota_mode="one-sided")
        self.assertAlmostEqual(cfg.iota, np.log(5 * 5 * 10000 / 0.005))

    def test_radius_unvisited(self):
        """An unvisited pair uses N = 1."""
        state = LearnerState(np.zeros((5, 5, 5)))
        expected = np.sqrt(2 * 5 * np.log(2 * 5 * 5 * 10000 / 0.005))
        self.assertAlmostEqual(optimism_radius(state, self.cfg, 1, 0, 0), expected)

    def test_radius_decay(self):
        """Quadrupling the count halves the radius, which decreases to zero."""
        counts = np.array([1, 4, 16, 100, 10**6])
        c = confidence_radii(counts, self.cfg)
        self.assertAlmostEqual(c[1], c[0] / 2)
        self.assertAlmostEqual(c[2], c[1] / 2)
        self.assertTrue(np.all(np.diff(c) < 0))
        self.assertLess(c[-1], 0.02)

    def test_radius_scale(self):
        """The radius scale multiplies every radius and leaves the log factor alone."""
        counts = np.array([[0, 1], [7, 250]])
        cfg = LearnerConfig(-1.1, 0.005, 5, 5, 5, 2000, radius_scale=0.05)
        self.assertEqual(cfg.iota, self.cfg.iota)
        expected = 0.05 * confidence_radii(counts, self.cfg)
        self.assertAllClose(confidence_radii(counts, cfg), expected)

    def test_validation(self):
        """Out-of-range settings are rejected."""
        with self.assertRaises(InvalidParameterError):
            LearnerConfig(-1.1, 1.0, 5, 5, 5, 10)
        with self.assertRaises(InvalidParameterError):
            LearnerConfig(-1.1, 0.1, 5, 5, 5, 0)
        with self.assertRaises(InvalidParameterError):
            LearnerConfig(-1.1, 0.1, 5, 5, 5, 10, iota_mode="other")
        with self.assertRaises(InvalidParameterError):
            LearnerConfig(-1.1, 0.1, 5, 5, 5, 10, support_cap=1)
        for scale in (0.0, -0.5, float("nan"), float("inf")):
            with self.assertRaisesRegex(InvalidParameterError, "radius_scale"):
                LearnerConfig(-1.1, 0.1, 5, 5, 5, 10, radius_scale=scale)


class TestLearnerState(RSDPTestCase):
    """Counting and the empirical model."""

    def test_initial_model(self):
        """Unvisited rows are uniform."""
        state = LearnerState(np.zeros((2, 4, 3)))
        self.assertAllClose(state.p_hat, 0.25)
        self.assertFalse(state.visited.any())

    def test_single_observation(self):
        """One transition gives a one-hot row and leaves the others uniform."""
        state = LearnerState(np.zeros((2, 3, 2)))
        step = TrajectoryStep(2, 1, 0, 0.0, 2)
        state.observe(Trajectory((step,)))
        self.assertAllClose(state.p_hat[1, 1, 0], [0.0, 0.0, 1.0])
        self.assertEqual(state.counts[1, 1, 0], 1)
        self.assertAllClose(state.p_hat[0], 1.0 / 3)
        self.assertAllClose(state.p_hat[1, 1, 1], 1.0 / 3)

    def test_incremental_matches_batch(self):
        """The incremental model equals the model rebuilt from counts."""
        rng = np.random.default_rng(40)
        H, S, A = 3, 4, 2
        state = LearnerState(np.zeros((H, S, A)))
        for _ in range(10**4 // H):
            s, a, s_next = rng.integers(S, size=H), rng.integers(A, size=H), rng.integers(S, size=H)
            steps = [
                TrajectoryStep(h + 1, int(s[h]), int(a[h]), 0.0, int(s_next[h])) for h in range(H)
            ]
            state.observe(Trajectory(tuple(steps)))
        batch = LearnerState.from_counts(state.rewards, state.next_counts)
        self.assertAllClose(state.p_hat, batch.p_hat, rtol=0, atol=1e-12)
        self.assertEqual(state.counts.sum(), H * (10**4 // H))

    def test_copy_is_independent(self):
        """Copies do not share counts."""
        state = LearnerState(np.zeros((1, 2, 1)))
        other = state.copy()
        other.observe(Trajectory((TrajectoryStep(1, 0, 0, 0.0, 1),)))
        self.assertEqual(state.counts.sum(), 0)

    def test_from_counts_validation(self):
        """Counts must be nonnegative integers of the right shape."""
        rewards = np.zeros((1, 2, 1))
        with self.assertRaises(ValidationError):
            LearnerState.from_counts(rewards, np.zeros((1, 2, 1, 3)))
        with self.assertRaises(ValidationError):
            LearnerState.from_counts(rewards, -np.ones((1, 2, 1, 2)))
        with self.assertRaises(ValidationError):
            LearnerState.from_counts(rewards, np.full((1, 2, 1, 2), 0.5))


@ddt
class TestConcentration(RSDPTestCase):
    """Exact radii, the good event and count snapshots."""

    def test_exact_radii(self):
        """Exact radii are l1 errors of the empirical rows."""
        mdp = random_mdp(np.random.default_rng(41), 3, 2, 2)
        state = LearnerState.from_counts(mdp.rewards, np.zeros((2, 3, 2, 3)))
        expected = np.abs(1.0 / 3 - mdp.transitions).sum(axis=-1)
        self.assertAllClose(exact_radii(mdp, state), expected)

    def good_event_rate(self, delta, runs):
        """Fraction of runs whose empirical model stays inside the radii for all episodes."""
        mdp = random_mdp(np.random.default_rng(42), 3, 2, 3)
        K = 20
        cfg = LearnerConfig.for_mdp(mdp, 1.0, delta, K)
        held = 0
        for seed in range(runs):
            rng = np.random.default_rng(seed)
            state = LearnerState(mdp.rewards)
            ok = True
            for k in range(K):
                pi = Policy(rng.integers(2, size=(3, 3)))
                state.observe(simulate_episode(mdp, pi, episode_rng(seed, k)))
                ok = ok and good_event_holds(mdp, state, cfg)
            held += ok
        return held / runs

    @data(0.05, 0.2)
    def test_good_event_frequency(self, delta):
        """The empirical model stays inside the confidence radii in most runs."""
        self.assertGreaterEqual(self.good_event_rate(delta, 100), 1 - delta - 0.02)

    @data(0.005, 0.05, 0.2)
    @slow_test
    def test_good_event_frequency_500_runs(self, delta):
        """Violation rate of the concentration event over 500 runs is at most delta + 0.02."""
        self.assertLessEqual(1 - self.good_event_rate(delta, 500), delta + 0.02)

    def test_snapshot(self):
        """Sampled snapshots follow the requested count range."""
        mdp = random_mdp(np.random.default_rng(43), 3, 2, 2)
        state = sample_count_snapshot(mdp, 50, np.random.default_rng(0), p_unvisited=0.3)
        self.assertTrue(np.all(state.counts <= 50))
        self.assertAllClose(state.p_hat.sum(axis=-1), 1.0)
        self.assertAllClose(state.p_hat[~state.visited], 1.0 / 3)
        self.assertTrue(np.all(state.next_counts[mdp.transitions == 0] == 0))

    def test_snapshot_round_trip(self):
        """Snapshots survive a round trip through JSON."""
        mdp = random_mdp(np.random.default_rng(44), 3, 2, 2)
        state = sample_count_snapshot(mdp, 20, np.random.default_rng(1))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "counts.json")
            save_count_snapshot(mdp, state, path)
            mdp2, state2 = load_count_snapshot(path)
        self.assertEqual(mdp2, mdp)
        self.assertTrue(np.array_equal(state2.next_counts, state.next_counts))
        self.assertAllClose(state2.p_hat, state.p_hat, rtol=0, atol=0)

    def test_snapshot_missing_keys(self):
        """A snapshot without counts is rejected."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "counts.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write('{"mdp": {}}')
            with self.assertRaises(ValidationError):
                load_count_snapshot(path)

    def test_snapshot_unreadable(self):
        """Undecodable bytes and non-integer sizes are validation errors."""
        mdp = random_mdp(np.random.default_rng(45), 3, 2, 2)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "counts.json")
            with open(path, "wb") as f:
                f.write(b'{"mdp": \xff}')
            with self.assertRaisesRegex(ValidationError, "UTF-8"):
                load_count_snapshot(path)

            save_count_snapshot(mdp, sample_count_snapshot(mdp, 5, np.random.default_rng(2)), path)
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            data["mdp"]["H"] = "two"
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f)
            with self.assertRaisesRegex(ValidationError, "integers"):
                load_count_snapshot(path)
