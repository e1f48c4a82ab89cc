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

"""
Multi-seed regret experiments.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from rsdp.exceptions import CapacityError, InvalidParameterError
from rsdp.learners import (
    LearnerConfig,
    IOTA_MODES,
    RISK_NEUTRAL_OK,
    available_algorithms,
    make_learner,
)
from rsdp.mdp import (
    TabularMDP,
    HardInstanceSpec,
    episode_rng,
    load_mdp,
    make_hard_mdp,
    make_risky_mdp,
    simulate_episode,
)
from rsdp.planning import DEFAULT_SUPPORT_CAP, policy_eval, rs_ddp_scalar

logger = logging.getLogger(__name__)

GENERATORS = ("risky", "hard")

# Radius scale of the regret experiments; 1.0 recovers the confidence radii of the learners.
DEFAULT_RADIUS_SCALE = 0.01


@dataclass(frozen=True)
class RegretRecord:
    """Regret of one episode of one ``(algo, seed)`` run; ``episode`` is 1-based."""

    algo: str
    seed: int
    episode: int
    v_star: float
    v_pik: float
    per_episode_regret: float
    cum_regret: float


@dataclass
class ExperimentConfig:
    """Configuration of a regret experiment.

    Attributes:
        algorithms: Learner selector strings.
        beta: Risk parameter.
        delta: Confidence level of the learners.
        num_episodes: Episodes K per run.
        seeds: Distinct run seeds.
        mdp_source: ``"risky"``, ``"hard"`` or the path of an MDP JSON file.
        hard_spec: Instance parameters used with ``mdp_source == "hard"``.
        support_cap: Support cap of the distributional learners.
        iota_mode: Log-factor convention of the confidence radii.
        radius_scale: Multiplier of the confidence radii and of the UCBVI bonus.
        max_workers: Worker processes; ``None`` reads ``RSDP_THREADS`` or uses the CPU count.
        exact_radii: Replace the confidence radii by the true model errors.
    """

    algorithms: Tuple[str, ...]
    beta: float
    delta: float = 0.005
    num_episodes: int = 2000
    seeds: Tuple[int, ...] = tuple(range(10))
    mdp_source: str = "risky"
    hard_spec: Optional[HardInstanceSpec] = None
    support_cap: int = DEFAULT_SUPPORT_CAP
    iota_mode: str = "two-sided"
    radius_scale: float = DEFAULT_RADIUS_SCALE
    max_workers: Optional[int] = None
    exact_radii: bool = False

    def __post_init__(self):
        self.algorithms = tuple(self.algorithms)
        self.seeds = tuple(int(s) for s in self.seeds)
        if not self.algorithms:
            raise InvalidParameterError("At least one algorithm is required.")
        unknown = [a for a in self.algorithms if a not in available_algorithms()]
        if unknown:
            raise InvalidParameterError(
                f"Unknown algorithms {unknown}; expected names from {available_algorithms()}."
            )
        if len(set(self.algorithms)) != len(self.algorithms):
            raise InvalidParameterError("Algorithms must be distinct.")
        if self.num_episodes < 1:
            raise InvalidParameterError(
                f"num_episodes must be at least 1, got {self.num_episodes}."
            )
        if not self.seeds:
            raise InvalidParameterError("At least one seed is required.")
        if len(set(self.seeds)) != len(self.seeds):
            raise InvalidParameterError("Seeds must be distinct.")
        if self.beta == 0.0:
            risky = [a for a in self.algorithms if a not in RISK_NEUTRAL_OK]
            if risky:
                raise InvalidParameterError(f"beta=0 is not supported by {risky}.")
        if self.iota_mode not in IOTA_MODES:
            raise InvalidParameterError(f"iota_mode must be one of {IOTA_MODES}.")
        if not 0.0 < self.radius_scale < float("inf"):
            raise InvalidParameterError(
                f"radius_scale must be positive and finite, got {self.radius_scale}."
            )
        if self.max_workers is not None and self.max_workers < 1:
            raise InvalidParameterError("max_workers must be at least 1.")

    def build_mdp(self) -> TabularMDP:
        """Instantiate the MDP named by :attr:`mdp_source`.

        Raises:
            InvalidParameterError: If ``"hard"`` is requested without :attr:`hard_spec`.
            ValidationError: If an MDP file is malformed.
        """
        if self.mdp_source == "risky":
            return make_risky_mdp()
        if self.mdp_source == "hard":
            if self.hard_spec is None:
                raise InvalidParameterError("mdp_source 'hard' needs a hard_spec.")
            return make_hard_mdp(self.hard_spec)
        return load_mdp(self.mdp_source)

    def learner_config(self, mdp: TabularMDP) -> LearnerConfig:
        """Learner configuration for ``mdp``."""
        return LearnerConfig.for_mdp(
            mdp,
            self.beta,
            self.delta,
            self.num_episodes,
            iota_mode=self.iota_mode,
            support_cap=self.support_cap,
            radius_scale=self.radius_scale,
        )


def resolve_workers(max_workers: Optional[int] = None) -> int:
    """Number of worker processes: ``max_workers``, else ``RSDP_THREADS``, else the CPU count.

    Raises:
        InvalidParameterError: If ``RSDP_THREADS`` is not a positive integer.
    """
    if max_workers is not None:
        return max_workers
    env = os.environ.get("RSDP_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError as err:
            raise InvalidParameterError(f"RSDP_THREADS must be an integer, got {env!r}.") from err
        if value < 1:
            raise InvalidParameterError(f"RSDP_THREADS must be positive, got {value}.")
        return value
    return os.cpu_count() or 1


def run_cell(
    mdp: TabularMDP, cfg: ExperimentConfig, algo: str, seed: int, v_star: float
) -> List[RegretRecord]:
    """One learner run of ``cfg.num_episodes`` episodes.

    Every episode: plan, evaluate the planned policy exactly, play it on the stream
    ``episode_rng(seed, k)`` and observe the trajectory.

    Raises:
        CapacityError: If a distributional learner exceeds its support cap, with the algorithm,
            seed and episode in the message.
    """
    learner_cfg = cfg.learner_config(mdp)
    learner = make_learner(
        algo, mdp, learner_cfg, exact_radii_mdp=mdp if cfg.exact_radii else None
    )
    s0 = mdp.initial_state

    records = []
    cum_regret = 0.0
    for k in range(1, cfg.num_episodes + 1):
        try:
            learner.plan()
        except CapacityError as err:
            raise CapacityError(f"{algo} (seed {seed}, episode {k}): {err.message}") from err
        v_pik = float(policy_eval(mdp, learner.policy, cfg.beta)[0, s0])
        regret = v_star - v_pik
        cum_regret += regret
        records.append(RegretRecord(algo, seed, k, v_star, v_pik, regret, cum_regret))
        learner.observe(simulate_episode(mdp, learner.policy, episode_rng(seed, k)))

    logger.info("Finished %s with seed %d, cumulative regret %.6g.", algo, seed, cum_regret)
    return records


def _run_cell_star(args):
    return run_cell(*args)


def run_experiment(cfg: ExperimentConfig, mdp: Optional[TabularMDP] = None) -> List[RegretRecord]:
    """Run every ``(algorithm, seed)`` pair of ``cfg``.

    Pairs run in worker processes when more than one worker is available. Records are returned
    ordered by algorithm (in ``cfg.algorithms`` order), seed (in ``cfg.seeds`` order) and
    episode, independently of scheduling. The optimal value is computed once with the scalar
    planner.

    Args:
        cfg: Experiment configuration.
        mdp: MDP to use instead of ``cfg.build_mdp()``.

    Returns:
        list: All :class:`RegretRecord` s.

    Raises:
        CapacityError: If a distributional learner exceeds its support cap.
    """
    mdp = cfg.build_mdp() if mdp is None else mdp
    v_star = rs_ddp_scalar(mdp, cfg.beta).value(mdp.initial_state)
    cells = [(mdp, cfg, algo, seed, v_star) for algo in cfg.algorithms for seed in cfg.seeds]
    workers = min(resolve_workers(cfg.max_workers), len(cells))
    logger.info(
        "Running %d runs of %d episodes on %d worker(s), V* = %.12g.",
        len(cells),
        cfg.num_episodes,
        workers,
        v_star,
    )

    if workers == 1:
        results = [_run_cell_star(cell) for cell in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_cell_star, cells))

    return [record for cell_records in results for record in cell_records]
