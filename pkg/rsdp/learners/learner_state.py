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

r"""
Learner configuration, count-based empirical model, confidence radii and count snapshots.
"""

import json
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from rsdp.distributions import RiskParam
from rsdp.exceptions import InvalidParameterError, RSDPError, ValidationError
from rsdp.mdp import TabularMDP, Policy, Trajectory, mdp_from_dict, mdp_to_dict
from rsdp.planning import DEFAULT_SUPPORT_CAP

IOTA_MODES = ("two-sided", "one-sided")


@dataclass(frozen=True)
class LearnerConfig:
    r"""Configuration shared by all learners.

    Attributes:
        beta: Risk parameter (a float or :class:`~rsdp.distributions.RiskParam`).
        delta: Confidence level in :math:`(0, 1)`.
        num_states: Number of states S.
        num_actions: Number of actions A.
        horizon: Horizon H.
        num_episodes: Number of episodes K, which fixes :math:`T = KH`.
        iota_mode: ``"two-sided"`` for :math:`\iota = \log(2SAT/\delta)`, ``"one-sided"`` for
            :math:`\iota = \log(SAT/\delta)`.
        radius_scale: Multiplier of every confidence radius. ``1.0`` keeps the radii for which
            the concentration event holds with probability at least :math:`1-\delta`; smaller
            values trade that guarantee for faster exploitation.
        support_cap: Largest support size of the distributional learners.
    """

    beta: float
    delta: float
    num_states: int
    num_actions: int
    horizon: int
    num_episodes: int
    iota_mode: str = "two-sided"
    support_cap: int = DEFAULT_SUPPORT_CAP
    radius_scale: float = 1.0

    def __post_init__(self):
        if isinstance(self.beta, RiskParam):
            object.__setattr__(self, "beta", self.beta.beta)
        object.__setattr__(self, "beta", RiskParam(self.beta).beta)

        if not 0.0 < self.delta < 1.0:
            raise InvalidParameterError(f"delta must lie in (0, 1), got {self.delta}.")
        if min(self.num_states, self.num_actions, self.horizon) < 1:
            raise InvalidParameterError("num_states, num_actions and horizon must be positive.")
        if self.num_episodes < 1:
            raise InvalidParameterError(
                f"num_episodes must be at least 1, got {self.num_episodes}."
            )
        if self.iota_mode not in IOTA_MODES:
            raise InvalidParameterError(
                f"iota_mode must be one of {IOTA_MODES}, got {self.iota_mode!r}."
            )
        if self.support_cap < 2:
            raise InvalidParameterError("support_cap must be at least 2.")
        if not (np.isfinite(self.radius_scale) and self.radius_scale > 0.0):
            raise InvalidParameterError(
                f"radius_scale must be positive and finite, got {self.radius_scale}."
            )

    @classmethod
    def for_mdp(cls, mdp: TabularMDP, beta: float, delta: float, num_episodes: int, **kwargs):
        """Configuration with the sizes of ``mdp``."""
        H, S, A = mdp.shape
        return cls(beta, delta, S, A, H, num_episodes, **kwargs)

    @property
    def total_steps(self) -> int:
        """:math:`T = KH`."""
        return self.num_episodes * self.horizon

    @property
    def iota(self) -> float:
        r"""Log factor :math:`\iota` of the confidence radii."""
        sat = self.num_states * self.num_actions * self.total_steps
        if self.iota_mode == "two-sided":
            return float(np.log(2 * sat / self.delta))
        return float(np.log(sat / self.delta))


def confidence_radii(counts: np.ndarray, cfg: LearnerConfig) -> np.ndarray:
    r"""Radii :math:`c = \kappa \sqrt{2S\iota / \max(N, 1)}` for every entry of ``counts``, with
    :math:`\kappa` the configured ``radius_scale``."""
    return cfg.radius_scale * np.sqrt(2 * cfg.num_states * cfg.iota / np.maximum(counts, 1))


@dataclass
class LearnerPlan:
    """Output of one planning pass.

    Attributes:
        policy: Greedy policy for the next episode.
        values: The learner's own value table, shape ``(H+1, S)``, in EntRM units (expected
            return for risk-neutral learners).
        q_values: Action values, shape ``(H, S, A)``.
        tables: Algorithm-specific tables, e.g. ``"log_W"``, ``"q"`` or ``"nu"``.
    """

    policy: Policy
    values: np.ndarray
    q_values: np.ndarray
    tables: Dict[str, object] = field(default_factory=dict, repr=False)


class LearnerState:
    """Visit counts and empirical transition model of one learner.

    Rows of :attr:`p_hat` for unvisited pairs are uniform; visited rows are the empirical
    next-state frequencies. Rewards are known to the learner.
    """

    def __init__(self, rewards: np.ndarray):
        """Initialize with no data.

        Args:
            rewards: Known reward tensor of shape ``(H, S, A)``.
        """
        rewards = np.array(rewards, dtype=float)
        if rewards.ndim != 3:
            raise InvalidParameterError(f"rewards must have shape (H, S, A), got {rewards.shape}.")
        H, S, A = rewards.shape
        self.rewards = rewards
        self.counts = np.zeros((H, S, A), dtype=np.int64)
        self.next_counts = np.zeros((H, S, A, S), dtype=np.int64)
        self.p_hat = np.full((H, S, A, S), 1.0 / S)
        self.policy: Optional[Policy] = None
        self.tables: Dict[str, object] = {}

    @classmethod
    def from_counts(cls, rewards: np.ndarray, next_counts: np.ndarray) -> "LearnerState":
        """State whose empirical model is built from ``next_counts[h, s, a, s']``.

        Raises:
            ValidationError: If the counts are negative, non-integer or mis-shaped.
        """
        state = cls(rewards)
        next_counts = np.asarray(next_counts)
        if next_counts.shape != state.next_counts.shape:
            raise ValidationError(
                f"next_counts must have shape {state.next_counts.shape}, got {next_counts.shape}."
            )
        if np.any(next_counts < 0) or not np.all(np.equal(np.mod(next_counts, 1), 0)):
            raise ValidationError("next_counts must be nonnegative integers.")
        state.next_counts = next_counts.astype(np.int64)
        state.counts = state.next_counts.sum(axis=-1)
        visited = state.counts > 0
        state.p_hat[visited] = state.next_counts[visited] / state.counts[visited][:, None]
        return state

    @property
    def shape(self):
        """``(H, S, A)``."""
        return self.counts.shape

    @property
    def visited(self) -> np.ndarray:
        """Boolean mask of visited ``(h, s, a)``."""
        return self.counts > 0

    def observe(self, trajectory: Trajectory):
        """Add the transitions of ``trajectory`` to the counts and empirical model."""
        for step in trajectory:
            h, s, a, s_next = step.h - 1, step.state, step.action, step.next_state
            self.counts[h, s, a] += 1
            self.next_counts[h, s, a, s_next] += 1
            self.p_hat[h, s, a] = self.next_counts[h, s, a] / self.counts[h, s, a]

    def copy(self) -> "LearnerState":
        """Independent copy of the counts and model (tables and policy are not copied)."""
        out = LearnerState(self.rewards)
        out.counts = self.counts.copy()
        out.next_counts = self.next_counts.copy()
        out.p_hat = self.p_hat.copy()
        return out


def optimism_radius(state: LearnerState, cfg: LearnerConfig, h: int, s: int, a: int) -> float:
    """Confidence radius of ``(h, s, a)`` with 1-based ``h``."""
    return float(confidence_radii(state.counts[h - 1, s, a], cfg))


def exact_radii(mdp: TabularMDP, state: LearnerState) -> np.ndarray:
    r"""Oracle radii :math:`\|\hat{P}_h(\cdot|s,a) - P_h(\cdot|s,a)\|_1`."""
    return np.abs(state.p_hat - mdp.transitions).sum(axis=-1)


def good_event_holds(mdp: TabularMDP, state: LearnerState, cfg: LearnerConfig) -> bool:
    """Whether every empirical row lies inside its confidence radius."""
    return bool(np.all(exact_radii(mdp, state) <= confidence_radii(state.counts, cfg)))


def sample_count_snapshot(
    mdp: TabularMDP, max_count: int, rng: np.random.Generator, p_unvisited: float = 0.0
) -> LearnerState:
    """Random counts drawn from the true model of ``mdp``.

    Each ``(h, s, a)`` gets a count uniform in ``[1, max_count]`` (0 with probability
    ``p_unvisited``) and next-state counts multinomial in the true row.
    """
    H, S, A = mdp.shape
    n = rng.integers(1, max_count + 1, size=(H, S, A))
    n[rng.random((H, S, A)) < p_unvisited] = 0
    next_counts = np.zeros((H, S, A, S), dtype=np.int64)
    for idx in np.ndindex(H, S, A):
        next_counts[idx] = rng.multinomial(n[idx], mdp.transitions[idx])
    return LearnerState.from_counts(mdp.rewards, next_counts)


def save_count_snapshot(mdp: TabularMDP, state: LearnerState, path: str):
    """Write ``{"mdp": ..., "next_counts": ...}`` JSON to ``path``.

    Raises:
        RSDPError: If the file cannot be written.
    """
    data = {"mdp": mdp_to_dict(mdp), "next_counts": state.next_counts.tolist()}
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f)
    except OSError as err:
        raise RSDPError(f"Could not write count snapshot {path}: {err}") from err


def load_count_snapshot(path: str):
    """Read a count snapshot.

    Returns:
        tuple: ``(mdp, state)``.

    Raises:
        ValidationError: If the file is malformed.
        RSDPError: If the file cannot be read.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except ValueError as err:
        raise ValidationError(f"Count snapshot {path} is not valid UTF-8 JSON: {err}") from err
    except OSError as err:
        raise RSDPError(f"Could not read count snapshot {path}: {err}") from err

    if not isinstance(data, dict) or "mdp" not in data or "next_counts" not in data:
        raise ValidationError(f"Count snapshot {path} needs keys 'mdp' and 'next_counts'.")
    mdp = mdp_from_dict(data["mdp"])
    try:
        next_counts = np.array(data["next_counts"], dtype=float)
    except (TypeError, ValueError) as err:
        raise ValidationError(f"next_counts in {path} are malformed: {err}") from err
    return mdp, LearnerState.from_counts(mdp.rewards, next_counts)


def resolve_radii(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> np.ndarray:
    """``radii`` if given, otherwise the confidence radii of the current counts.

    Raises:
        InvalidParameterError: If ``radii`` has the wrong shape or negative entries.
    """
    if radii is None:
        return confidence_radii(state.counts, cfg)
    radii = np.asarray(radii, dtype=float)
    if radii.shape != state.shape or np.any(radii < 0):
        raise InvalidParameterError(
            f"radii must be a nonnegative array of shape {state.shape}, got {radii.shape}."
        )
    return radii


def require_risk_sensitive(cfg: LearnerConfig, name: str):
    """Reject ``beta == 0`` for learners built on the exponential utility.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    if cfg.beta == 0.0:
        raise InvalidParameterError(f"{name} requires a nonzero beta.")
