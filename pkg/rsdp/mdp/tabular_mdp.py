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
Tabular episodic MDPs, deterministic Markov policies and trajectories.
"""

import json
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from rsdp.exceptions import RSDPError, ValidationError
from rsdp.distributions import PROB_TOL


class TabularMDP:
    r"""A finite-horizon MDP with horizon-indexed transitions and deterministic rewards.

    Step ``h`` (1-based) of the episode uses row ``h - 1`` of :attr:`transitions` and
    :attr:`rewards`:

    * ``transitions[h - 1, s, a]`` is the probability vector :math:`P_h(\cdot | s, a)`.
    * ``rewards[h - 1, s, a]`` is :math:`r_h(s, a) \in [0, 1]`.

    Instances are immutable; the stored arrays are read-only.
    """

    def __init__(self, transitions, rewards, initial_state: int = 0):
        """Initialize and validate.

        Args:
            transitions: Array of shape ``(H, S, A, S)``.
            rewards: Array of shape ``(H, S, A)``.
            initial_state: Index of the state every episode starts from.

        Raises:
            ValidationError: If shapes are inconsistent, a transition row is off the simplex
                by more than ``PROB_TOL``, or a reward lies outside :math:`[0, 1]`.
        """
        P = np.array(transitions, dtype=float)
        r = np.array(rewards, dtype=float)

        if P.ndim != 4 or P.shape[1] != P.shape[3]:
            raise ValidationError(
                f"transitions must have shape (H, S, A, S), got {P.shape}."
            )
        if r.shape != P.shape[:3]:
            raise ValidationError(
                f"rewards must have shape {P.shape[:3]} to match transitions, got {r.shape}."
            )
        if min(P.shape) < 1:
            raise ValidationError("H, S and A must all be positive.")
        if not (np.all(np.isfinite(P)) and np.all(np.isfinite(r))):
            raise ValidationError("Transitions and rewards must be finite.")
        if np.any(P < -PROB_TOL):
            raise ValidationError("Transition probabilities must be nonnegative.")

        row_sums = P.sum(axis=-1)
        bad = np.argwhere(np.abs(row_sums - 1.0) > PROB_TOL)
        if len(bad):
            h, s, a = bad[0]
            raise ValidationError(
                f"Transition row (h={h + 1}, s={s}, a={a}) sums to {row_sums[h, s, a]}, not 1."
            )
        if np.any(r < 0.0) or np.any(r > 1.0):
            raise ValidationError("Rewards must lie in [0, 1].")

        initial_state = int(initial_state)
        if not 0 <= initial_state < P.shape[1]:
            raise ValidationError(f"initial_state {initial_state} is not a valid state.")

        P = np.clip(P, 0.0, None)
        P.flags.writeable = False
        r.flags.writeable = False
        self._transitions = P
        self._rewards = r
        self._initial_state = initial_state

    @property
    def transitions(self) -> np.ndarray:
        """Transition tensor of shape ``(H, S, A, S)``."""
        return self._transitions

    @property
    def rewards(self) -> np.ndarray:
        """Reward tensor of shape ``(H, S, A)``."""
        return self._rewards

    @property
    def initial_state(self) -> int:
        """Start state of every episode."""
        return self._initial_state

    @property
    def horizon(self) -> int:
        """Number of steps H per episode."""
        return self._transitions.shape[0]

    @property
    def num_states(self) -> int:
        """Number of states S."""
        return self._transitions.shape[1]

    @property
    def num_actions(self) -> int:
        """Number of actions A."""
        return self._transitions.shape[2]

    @property
    def shape(self) -> Tuple[int, int, int]:
        """``(H, S, A)``."""
        return self._rewards.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, TabularMDP):
            return False
        return (
            self._initial_state == other._initial_state
            and np.array_equal(self._transitions, other._transitions)
            and np.array_equal(self._rewards, other._rewards)
        )

    __hash__ = None

    def __repr__(self) -> str:
        H, S, A = self.shape
        return f"TabularMDP(H={H}, S={S}, A={A}, initial_state={self._initial_state})"


class Policy:
    """Deterministic Markov policy ``actions[h - 1, s]`` for 1-based step ``h``."""

    def __init__(self, actions, num_actions: Optional[int] = None):
        """Initialize.

        Args:
            actions: Integer array of shape ``(H, S)``.
            num_actions: If given, every entry is checked to lie in ``[0, num_actions)``.

        Raises:
            ValidationError: If the array is not two-dimensional or holds invalid actions.
        """
        arr = np.array(actions)
        if arr.ndim != 2:
            raise ValidationError(f"Policy actions must have shape (H, S), got {arr.shape}.")
        if arr.size and not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValidationError("Policy actions must be integers.")
        arr = arr.astype(np.int64)
        if np.any(arr < 0) or (num_actions is not None and np.any(arr >= num_actions)):
            raise ValidationError("Policy actions must lie in [0, A).")
        arr.flags.writeable = False
        self._actions = arr

    @classmethod
    def constant(cls, action: int, horizon: int, num_states: int) -> "Policy":
        """Policy that plays ``action`` everywhere."""
        return cls(np.full((horizon, num_states), action, dtype=np.int64))

    @classmethod
    def from_array(cls, actions, mdp: Optional[TabularMDP] = None) -> "Policy":
        """Policy from an (H, S) action array, checked against ``mdp`` when given.

        Raises:
            ValidationError: If the array is not a valid policy for ``mdp``.
        """
        policy = cls(actions, None if mdp is None else mdp.shape[2])
        if mdp is not None:
            policy.check_compatible(mdp)
        return policy

    @property
    def actions(self) -> np.ndarray:
        """Action table of shape ``(H, S)``."""
        return self._actions

    @property
    def horizon(self) -> int:
        """Number of steps covered."""
        return self._actions.shape[0]

    def __call__(self, h: int, s: int) -> int:
        """Action at 1-based step ``h`` in state ``s``."""
        return int(self._actions[h - 1, s])

    def check_compatible(self, mdp: TabularMDP):
        """Raise if this policy does not fit ``mdp``.

        Raises:
            ValidationError: On a shape or action-range mismatch.
        """
        H, S, A = mdp.shape
        if self._actions.shape != (H, S):
            raise ValidationError(
                f"Policy shape {self._actions.shape} does not match MDP shape {(H, S)}."
            )
        if np.any(self._actions >= A):
            raise ValidationError(f"Policy plays an action outside [0, {A}).")

    def tolist(self) -> List[List[int]]:
        """Nested-list form used in JSON output."""
        return self._actions.tolist()

    def __eq__(self, other) -> bool:
        return isinstance(other, Policy) and np.array_equal(self._actions, other._actions)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Policy({self._actions.tolist()})"


class TrajectoryStep(NamedTuple):
    """One transition of an episode; ``h`` is 1-based."""

    h: int
    state: int
    action: int
    reward: float
    next_state: int


@dataclass(frozen=True)
class Trajectory:
    """The H transitions of one episode."""

    steps: Tuple[TrajectoryStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def states(self) -> List[int]:
        """Visited states, including the final next state."""
        if not self.steps:
            return []
        return [step.state for step in self.steps] + [self.steps[-1].next_state]

    @property
    def actions(self) -> List[int]:
        """Played actions."""
        return [step.action for step in self.steps]

    @property
    def rewards(self) -> List[float]:
        """Collected rewards."""
        return [step.reward for step in self.steps]

    @property
    def total_reward(self) -> float:
        """Return of the episode."""
        return float(sum(self.rewards))


def mdp_to_dict(mdp: TabularMDP) -> dict:
    """JSON-ready dict ``{"S", "A", "H", "initial_state", "P", "r"}``."""
    H, S, A = mdp.shape
    return {
        "S": S,
        "A": A,
        "H": H,
        "initial_state": mdp.initial_state,
        "P": mdp.transitions.tolist(),
        "r": mdp.rewards.tolist(),
    }


def mdp_from_dict(data: dict) -> TabularMDP:
    """Inverse of :func:`mdp_to_dict`.

    Raises:
        ValidationError: If keys are missing or the declared sizes disagree with the arrays.
    """
    if not isinstance(data, dict):
        raise ValidationError("MDP data must be a JSON object.")
    missing = {"S", "A", "H", "P", "r"} - set(data)
    if missing:
        raise ValidationError(f"MDP data is missing keys {sorted(missing)}.")

    try:
        P = np.array(data["P"], dtype=float)
        r = np.array(data["r"], dtype=float)
    except (TypeError, ValueError) as err:
        raise ValidationError(f"MDP arrays are malformed: {err}") from err

    try:
        expected = tuple(int(data[key]) for key in ("H", "S", "A"))
    except (TypeError, ValueError) as err:
        raise ValidationError(f"MDP sizes H, S and A must be integers: {err}") from err
    if P.shape != expected + (expected[1],):
        raise ValidationError(
            f"P has shape {P.shape}, expected {expected + (expected[1],)} from H, S, A."
        )
    return TabularMDP(P, r, initial_state=data.get("initial_state", 0))


def save_mdp(mdp: TabularMDP, path: str):
    """Write ``mdp`` to ``path`` as JSON.

    Raises:
        RSDPError: If the file cannot be written.
    """
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(mdp_to_dict(mdp), f)
    except OSError as err:
        raise RSDPError(f"Could not write MDP file {path}: {err}") from err


def load_mdp(path: str) -> TabularMDP:
    """Read an MDP JSON file.

    Raises:
        ValidationError: If the file is not valid JSON or violates the MDP invariants.
        RSDPError: If the file cannot be read.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except ValueError as err:
        raise ValidationError(f"MDP file {path} is not valid UTF-8 JSON: {err}") from err
    except OSError as err:
        raise RSDPError(f"Could not read MDP file {path}: {err}") from err
    return mdp_from_dict(data)
