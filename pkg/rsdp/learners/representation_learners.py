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
Learners with two-atom return representations.

The return from step :math:`h` is represented by the distribution
:math:`(0, H+1-h; q_h)` with mass :math:`q_h` on the top atom. A backup mixes the next-step
representations under :math:`\hat{P}_h` into :math:`(0, H-h; \bar{q})`, shifts it by the reward
and projects it back onto :math:`\{0, H+1-h\}`, which is the affine map

.. math::
    \bar{q} \mapsto (1 - \bar{q})\, q^L_h(s,a) + \bar{q}\, q^R_h(s,a)

with fixed coefficients :math:`q^L_h, q^R_h`. Optimism raises the weight of the top atom by the
confidence radius, either before the projection (:func:`rodi_otp_plan`) or after it
(:func:`rodi_pto_plan`).
"""

from typing import Optional, Tuple

import numpy as np

from rsdp.distributions import BernoulliSupport, bernoulli_fraction
from rsdp.planning import greedy_actions, value_range
from rsdp.planning.planning_utils import select
from rsdp.mdp import Policy
from .learner_state import (
    LearnerConfig,
    LearnerPlan,
    LearnerState,
    resolve_radii,
    require_risk_sensitive,
)


def projection_coefficients(rewards: np.ndarray, beta: float) -> Tuple[np.ndarray, np.ndarray]:
    r"""Coefficients :math:`q^L_h(s,a) = q(r_h(s,a))` and :math:`q^R_h(s,a) = q(r_h(s,a) + H - h)`
    of the projection onto :math:`\{0, H+1-h\}`.

    They depend only on the rewards and ``beta`` and can be computed once per run.
    """
    H = rewards.shape[0]
    top = value_range(H)
    q_left = np.empty(rewards.shape)
    q_right = np.empty(rewards.shape)
    for h in range(H):
        support = BernoulliSupport(0.0, top[h])
        q_left[h] = bernoulli_fraction(rewards[h], support, beta)
        q_right[h] = bernoulli_fraction(rewards[h] + top[h] - 1.0, support, beta)
    return q_left, q_right


def bernoulli_entrm(q: np.ndarray, hi: float, beta: float) -> np.ndarray:
    r"""EntRM :math:`\frac{1}{\beta}\log(1 - q + q e^{\beta\,hi})` of :math:`(0, hi; q)`."""
    q = np.clip(q, 0.0, 1.0)
    with np.errstate(divide="ignore"):
        out = np.logaddexp(np.log1p(-q), np.log(q) + beta * hi) / beta
    return np.clip(out, 0.0, hi)


def _parametric_pass(state, cfg, radii, optimistic_first: bool) -> LearnerPlan:
    c = resolve_radii(state, cfg, radii)
    beta = cfg.beta
    H, S, A = state.shape
    top = value_range(H)

    q_left, q_right = projection_coefficients(state.rewards, beta)

    q_state = np.zeros((H + 1, S))
    q_sa = np.empty((H, S, A))
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    for h in range(H - 1, -1, -1):
        q_bar = state.p_hat[h] @ q_state[h + 1]
        if optimistic_first:
            q_tilde = np.minimum(q_bar + c[h], 1.0)
            q = (1.0 - q_tilde) * q_left[h] + q_tilde * q_right[h]
        else:
            q = (1.0 - q_bar) * q_left[h] + q_bar * q_right[h]
            q = np.minimum(q + c[h], 1.0)
        q = np.clip(q, 0.0, 1.0)
        q[state.counts[h] == 0] = 1.0

        q_sa[h] = q
        Q[h] = bernoulli_entrm(q, top[h], beta)
        pi[h] = greedy_actions(Q[h])
        q_state[h] = select(q, pi[h])

    V = np.zeros((H + 1, S))
    for h in range(H):
        V[h] = select(Q[h], pi[h])

    state.policy = Policy(pi, A)
    state.tables = {"q": q_state, "q_sa": q_sa, "q_left": q_left, "q_right": q_right}
    return LearnerPlan(state.policy, V, Q, state.tables)


def rodi_otp_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Optimism then projection: :math:`\tilde{q} = \min(\hat{P} q_{h+1} + c, 1)` followed by
    the projection map.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RODI-OTP")
    return _parametric_pass(state, cfg, radii, optimistic_first=True)


def rodi_pto_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Projection then optimism: the projection map applied to :math:`\hat{P} q_{h+1}`,
    followed by :math:`q \mapsto \min(q + c, 1)`.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RODI-PTO")
    return _parametric_pass(state, cfg, radii, optimistic_first=False)
