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
Instance generators: the risky/safe experiment MDP and the tree-structured hard instances.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from rsdp.exceptions import InvalidParameterError
from .tabular_mdp import TabularMDP


def make_risky_mdp(num_states: int = 5, num_actions: int = 5, horizon: int = 5) -> TabularMDP:
    r"""Build the experiment MDP contrasting risky actions with one safe action.

    The MDP has ``num_states + 1`` states: the initial state 0 and states ``1..S``. State 1 pays
    reward 1, state ``S`` pays 0.4, every other state pays 0. At every step and in every state:

    * actions ``0..A-2`` (risky) move to state 1 with probability 0.5 and uniformly to states
      ``2..S-1`` otherwise;
    * action ``A-1`` (safe) moves to state ``S`` with probability 0.999 and uniformly to states
      ``1..S-1`` otherwise.

    The first step out of state 0 uses the same rows.

    Args:
        num_states: Number S of non-initial states, at least 3.
        num_actions: Number of actions A, at least 2.
        horizon: Number of steps H, at least 1.

    Returns:
        TabularMDP: The MDP with ``initial_state == 0``.

    Raises:
        InvalidParameterError: If a size is too small.
    """
    S, A, H = int(num_states), int(num_actions), int(horizon)
    if S < 3 or A < 2 or H < 1:
        raise InvalidParameterError(
            "make_risky_mdp needs num_states >= 3, num_actions >= 2, horizon >= 1; "
            f"got {S}, {A}, {H}."
        )

    risky = np.zeros(S + 1)
    risky[1] = 0.5
    risky[2:S] = 0.5 / (S - 2)

    safe = np.zeros(S + 1)
    safe[S] = 0.999
    safe[1:S] = 0.001 / (S - 1)

    P = np.empty((H, S + 1, A, S + 1))
    P[:, :, : A - 1, :] = risky
    P[:, :, A - 1, :] = safe

    r = np.zeros((H, S + 1, A))
    r[:, 1, :] = 1.0
    r[:, S, :] = 0.4
    return TabularMDP(P, r, initial_state=0)


@dataclass(frozen=True)
class HardInstanceSpec:
    r"""Parameters of one instance of the hard MDP class.

    States are laid out as the nodes of a full ``branching``-ary tree of depth ``depth`` in
    breadth-first order (root 0, children of node ``i`` at ``branching * i + 1 + a``), followed by
    the waiting state, the good state and the bad state. The episode starts in the waiting state.

    Attributes:
        branching: Number of actions A, also the tree's branching factor.
        depth: Tree depth d, so that the tree has :math:`A^{d-1}` leaves.
        horizon: Horizon H.
        waiting_horizon: Last step :math:`\bar{H}` at which the agent may keep waiting. Defaults
            to ``horizon // 3``.
        h_star: 1-based step of the distinguished leaf transition. Defaults to ``depth + 1``.
        leaf_star: Index of the distinguished leaf among the leaves.
        action_star: Distinguished action at that leaf.
        p: Baseline probability of reaching the good state from a leaf.
        epsilon: Extra probability at the distinguished triple.
        beta: Risk parameter the instance is evaluated with.
    """

    branching: int
    depth: int
    horizon: int
    waiting_horizon: Optional[int] = None
    h_star: Optional[int] = None
    leaf_star: int = 0
    action_star: int = 0
    p: float = 0.25
    epsilon: float = 0.0
    beta: float = 1.0

    def __post_init__(self):
        if self.waiting_horizon is None:
            object.__setattr__(self, "waiting_horizon", self.horizon // 3)
        if self.h_star is None:
            object.__setattr__(self, "h_star", self.depth + 1)

        A, d, H, Hbar = self.branching, self.depth, self.horizon, self.waiting_horizon
        if A < 2:
            raise InvalidParameterError(f"branching must be at least 2, got {A}.")
        if d < 1:
            raise InvalidParameterError(f"depth must be at least 1, got {d}.")
        if H < 3 * d:
            raise InvalidParameterError(f"horizon must be at least 3 * depth, got H={H}, d={d}.")
        if Hbar < 1:
            raise InvalidParameterError(f"waiting_horizon must be at least 1, got {Hbar}.")
        if Hbar + d + 1 > H:
            raise InvalidParameterError(
                "waiting_horizon + depth + 1 must not exceed the horizon, "
                f"got {Hbar + d + 1} > {H}."
            )
        if not d + 1 <= self.h_star <= Hbar + d:
            raise InvalidParameterError(
                f"h_star must lie in [{d + 1}, {Hbar + d}], got {self.h_star}."
            )
        if not 0 <= self.leaf_star < self.num_leaves:
            raise InvalidParameterError(
                f"leaf_star must lie in [0, {self.num_leaves}), got {self.leaf_star}."
            )
        if not 0 <= self.action_star < A:
            raise InvalidParameterError(
                f"action_star must lie in [0, {A}), got {self.action_star}."
            )
        if self.p < 0 or self.epsilon < 0 or self.p + self.epsilon > 1:
            raise InvalidParameterError(
                f"Need p >= 0, epsilon >= 0 and p + epsilon <= 1, got p={self.p}, "
                f"epsilon={self.epsilon}."
            )
        if not np.isfinite(self.beta):
            raise InvalidParameterError("beta must be finite.")

    @classmethod
    def lower_bound_instance(
        cls,
        branching: int,
        depth: int,
        horizon: int,
        num_episodes: int,
        beta: float,
        h_star: Optional[int] = None,
        leaf_star: int = 0,
        action_star: int = 0,
    ) -> "HardInstanceSpec":
        r"""Instance with the constants of the regret lower-bound construction.

        Uses :math:`\bar{H} = \lfloor H/3 \rfloor`, :math:`p = \frac{1}{4} e^{-\beta H'}` and
        :math:`\varepsilon = \sqrt{p/2}\,(1 - \frac{1}{\bar{L} A \bar{H}})
        \sqrt{\bar{L} A \bar{H} / K}`, with :math:`\varepsilon` reduced if needed so that
        :math:`p + \varepsilon \le 1`.
        """
        if num_episodes < 1:
            raise InvalidParameterError("num_episodes must be at least 1.")
        base = cls(branching, depth, horizon, h_star=h_star, beta=beta)
        n = base.num_leaves * branching * base.waiting_horizon
        p = 0.25 * np.exp(-beta * base.reward_steps)
        p = min(p, 1.0)
        epsilon = np.sqrt(p / 2) * (1 - 1 / n) * np.sqrt(n / num_episodes)
        epsilon = min(epsilon, 1.0 - p)
        return cls(
            branching,
            depth,
            horizon,
            h_star=h_star,
            leaf_star=leaf_star,
            action_star=action_star,
            p=float(p),
            epsilon=float(epsilon),
            beta=beta,
        )

    @property
    def num_tree_nodes(self) -> int:
        """Number of tree nodes, :math:`(A^d - 1)/(A - 1)`."""
        return (self.branching**self.depth - 1) // (self.branching - 1)

    @property
    def num_leaves(self) -> int:
        r"""Number of leaves :math:`\bar{L} = A^{d-1}`."""
        return self.branching ** (self.depth - 1)

    @property
    def num_states(self) -> int:
        """Total number of states, tree plus three special states."""
        return self.num_tree_nodes + 3

    @property
    def waiting_state(self) -> int:
        """Index of the waiting (initial) state."""
        return self.num_tree_nodes

    @property
    def good_state(self) -> int:
        """Index of the absorbing rewarding state."""
        return self.num_tree_nodes + 1

    @property
    def bad_state(self) -> int:
        """Index of the absorbing non-rewarding state."""
        return self.num_tree_nodes + 2

    @property
    def first_leaf(self) -> int:
        """Index of leaf 0."""
        return self.num_tree_nodes - self.num_leaves

    @property
    def reward_start(self) -> int:
        r"""First rewarding step :math:`\tilde{H} = \bar{H} + d + 1`."""
        return self.waiting_horizon + self.depth + 1

    @property
    def reward_steps(self) -> int:
        r"""Number of rewarding steps :math:`H' = H + 1 - \tilde{H}`."""
        return self.horizon + 1 - self.reward_start

    def optimal_value(self, beta: Optional[float] = None) -> float:
        r"""Closed-form optimal EntRM value
        :math:`\frac{1}{\beta}\log(e^{\beta H'}(p+\varepsilon) + 1 - p - \varepsilon)`.

        For ``beta == 0`` the mean :math:`H'(p + \varepsilon)` is returned.
        """
        beta = self.beta if beta is None else float(beta)
        q = self.p + self.epsilon
        if beta == 0.0:
            return self.reward_steps * q
        # log(1 + q (e^{beta H'} - 1)) without overflow
        x = beta * self.reward_steps
        if x > 0:
            return float((x + np.log(q + (1 - q) * np.exp(-x))) / beta)
        return float(np.log1p(q * np.expm1(x)) / beta)


def make_hard_mdp(spec: HardInstanceSpec) -> TabularMDP:
    """Build the hard instance described by ``spec``.

    Tree transitions are deterministic. The waiting state loops on action 0 up to step
    ``waiting_horizon`` and otherwise moves to the root. From a leaf every action reaches the good
    state with probability ``p``, plus ``epsilon`` at ``(h_star, leaf_star, action_star)``, and the
    bad state otherwise. The good and bad states are absorbing. Reward 1 is paid in the good state
    from step ``reward_start`` on.

    Args:
        spec: Validated instance parameters.

    Returns:
        TabularMDP: The instance, starting in the waiting state.
    """
    A, H, S = spec.branching, spec.horizon, spec.num_states
    n_tree = spec.num_tree_nodes
    s_w, s_g, s_b = spec.waiting_state, spec.good_state, spec.bad_state

    P = np.zeros((H, S, A, S))

    for node in range(spec.first_leaf):
        for a in range(A):
            P[:, node, a, A * node + 1 + a] = 1.0

    leaves = np.arange(spec.first_leaf, n_tree)
    P[:, leaves, :, s_g] = spec.p
    P[:, leaves, :, s_b] = 1.0 - spec.p
    hs, ls, a_s = spec.h_star - 1, spec.first_leaf + spec.leaf_star, spec.action_star
    P[hs, ls, a_s, s_g] += spec.epsilon
    P[hs, ls, a_s, s_b] -= spec.epsilon

    P[:, s_w, :, 0] = 1.0
    P[: spec.waiting_horizon, s_w, 0, 0] = 0.0
    P[: spec.waiting_horizon, s_w, 0, s_w] = 1.0

    P[:, s_g, :, s_g] = 1.0
    P[:, s_b, :, s_b] = 1.0

    r = np.zeros((H, S, A))
    r[spec.reward_start - 1 :, s_g, :] = 1.0
    return TabularMDP(P, r, initial_state=s_w)
