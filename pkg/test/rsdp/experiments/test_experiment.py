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

"""Tests for experiment.py."""

import os
import tempfile
from unittest import mock

import numpy as np

from rsdp.exceptions import CapacityError, InvalidParameterError
from rsdp.experiments import (
    DEFAULT_RADIUS_SCALE,
    ExperimentConfig,
    aggregate,
    resolve_workers,
    run_experiment,
)
from rsdp.mdp import HardInstanceSpec, make_risky_mdp, save_mdp

from ..common import RSDPTestCase, random_mdp, slow_test


class TestExperimentConfig(RSDPTestCase):
    """Validation of ExperimentConfig."""

    def test_defaults(self):
        """Defaults follow the risky-MDP experiment."""
        cfg = ExperimentConfig(["rodi-mb"], -1.1)
        self.assertEqual(cfg.delta, 0.005)
        self.assertEqual(cfg.num_episodes, 2000)
        self.assertEqual(cfg.seeds, tuple(range(10)))
        self.assertEqual(cfg.build_mdp(), make_risky_mdp())
        learner_cfg = cfg.learner_config(make_risky_mdp())
        self.assertEqual(learner_cfg.radius_scale, DEFAULT_RADIUS_SCALE)
        self.assertEqual(learner_cfg.num_episodes, 2000)

    def test_invalid(self):
        """Unknown or repeated names, repeated seeds and K < 1 are rejected."""
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["nope"], -1.1)
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi", "rovi"], -1.1)
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi"], -1.1, seeds=[1, 1])
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi"], -1.1, seeds=[])
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi"], -1.1, num_episodes=0)
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi"], 0.0)
        for scale in (0.0, -1.0, float("nan"), float("inf")):
            with self.assertRaisesRegex(InvalidParameterError, "radius_scale"):
                ExperimentConfig(["rovi"], -1.1, radius_scale=scale)

    def test_risk_neutral(self):
        """UCBVI and the oracle run with beta = 0."""
        ExperimentConfig(["ucbvi", "oracle"], 0.0)

    def test_hard_source(self):
        """The hard generator needs instance parameters."""
        with self.assertRaises(InvalidParameterError):
            ExperimentConfig(["rovi"], 0.5, mdp_source="hard").build_mdp()
        spec = HardInstanceSpec(2, 2, 9)
        mdp = ExperimentConfig(["rovi"], 0.5, mdp_source="hard", hard_spec=spec).build_mdp()
        self.assertEqual(mdp.num_states, spec.num_states)

    def test_file_source(self):
        """Any other source is read as an MDP file."""
        mdp = random_mdp(np.random.default_rng(0), 2, 2, 2)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "mdp.json")
            save_mdp(mdp, path)
            self.assertEqual(ExperimentConfig(["rovi"], 0.5, mdp_source=path).build_mdp(), mdp)

    def test_workers(self):
        """Worker count from the argument, the environment or the CPU count."""
        self.assertEqual(resolve_workers(3), 3)
        with mock.patch.dict(os.environ, {"RSDP_THREADS": "2"}):
            self.assertEqual(resolve_workers(), 2)
        with mock.patch.dict(os.environ, {"RSDP_THREADS": "x"}):
            with self.assertRaises(InvalidParameterError):
                resolve_workers()
        with mock.patch.dict(os.environ, {"RSDP_THREADS": ""}):
            self.assertGreaterEqual(resolve_workers(), 1)


class TestRunExperiment(RSDPTestCase):
    """Tests for run_experiment."""

    def test_single_episode(self):
        """K = 1 gives one record per algorithm and seed."""
        cfg = ExperimentConfig(
            ["rovi", "rsvi2"], -1.1, num_episodes=1, seeds=[0, 1, 2], max_workers=1
        )
        records = run_experiment(cfg)
        self.assertEqual(len(records), 6)
        self.assertEqual([r.algo for r in records], ["rovi"] * 3 + ["rsvi2"] * 3)
        self.assertEqual([r.seed for r in records], [0, 1, 2] * 2)
        self.assertTrue(all(r.episode == 1 for r in records))

    def test_oracle_has_no_regret(self):
        """The optimal policy has zero regret."""
        cfg = ExperimentConfig(["oracle"], -1.1, num_episodes=20, seeds=[0, 1], max_workers=1)
        records = run_experiment(cfg)
        self.assertTrue(all(abs(r.cum_regret) <= 1e-9 for r in records))

    def test_regret_properties(self):
        """Regret is nonnegative and cumulative regret nondecreasing."""
        cfg = ExperimentConfig(
            ["rodi-mf", "rodi-mb", "rodi-otp", "ucbvi"],
            1.0,
            num_episodes=15,
            seeds=[4],
            max_workers=1,
        )
        records = run_experiment(cfg)
        v_star = records[0].v_star
        for algo in cfg.algorithms:
            run = [r for r in records if r.algo == algo]
            self.assertEqual([r.episode for r in run], list(range(1, 16)))
            self.assertTrue(all(r.per_episode_regret >= -1e-9 for r in run))
            self.assertTrue(all(r.v_star == v_star for r in run))
            cum = np.array([r.cum_regret for r in run])
            self.assertTrue(np.all(np.diff(cum) >= -1e-9))
            self.assertAlmostEqual(cum[-1], sum(r.per_episode_regret for r in run))

    def test_deterministic_across_workers(self):
        """Results do not depend on the number of worker processes."""
        base = {"algorithms": ("rovi", "rodi-pto"), "beta": -1.1, "num_episodes": 8}
        base["seeds"] = (0, 1)
        serial = run_experiment(ExperimentConfig(**base, max_workers=1))
        parallel = run_experiment(ExperimentConfig(**base, max_workers=2))
        self.assertEqual(serial, parallel)

    def test_capacity_context(self):
        """Capacity errors name the algorithm, seed and episode."""
        mdp = random_mdp(np.random.default_rng(1), 3, 2, 4, sparsity=0.0)
        cfg = ExperimentConfig(
            ["rodi-mf"], -1.0, num_episodes=30, seeds=[7], support_cap=2, max_workers=1
        )
        with self.assertRaisesRegex(CapacityError, r"rodi-mf \(seed 7, episode \d+\)"):
            run_experiment(cfg, mdp)

    @slow_test
    def test_regret_ordering(self):
        """Final mean regret on the risky MDP ranks the learners with clear gaps."""
        order = ["rodi-mb", "rodi-mf", "rodi-otp", "rodi-pto", "rsvi2", "rsvi", "ucbvi"]
        curves = aggregate(run_experiment(ExperimentConfig(order, -1.1)))
        final = {name: curves[name].final_mean for name in order}
        margin = 0.01 * final["ucbvi"]
        for better, worse in zip(order[:-1], order[1:]):
            with self.subTest(better=better, worse=worse):
                if (better, worse) == ("rodi-pto", "rsvi2"):
                    self.assertLessEqual(final[better], final[worse] + margin)
                else:
                    self.assertLessEqual(final[better] + margin, final[worse])
        for name in order[:-1]:
            with self.subTest(linear=name):
                self.assertGreaterEqual(final["ucbvi"], 2 * final[name])
