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
Learners planning over scalar values.

:func:`rovi_plan` applies model optimism inside the exponential-utility recursion.
:func:`rsvi2_plan` and :func:`rsvi_plan` add an exploration bonus to the exponential-utility
aggregate, and :func:`ucbvi_plan` is the risk-neutral Hoeffding-bonus baseline. All recursions on
exponential utilities are carried out on their logarithms.
"""

from typing import Optional

import numpy as np
from scipy.special import logsumexp

from rsdp.distributions import optimism_pmf
from rsdp.planning import greedy_actions, log_backup, value_range
from rsdp.planning.planning_utils import select, eu_table
from rsdp.mdp import Policy
from .learner_state import (
    LearnerConfig,
    LearnerPlan,
    LearnerState,
    resolve_radii,
    require_risk_sensitive,
)


def log_abs_expm1(x: np.ndarray) -> np.ndarray:
    r""":math:`\log|e^x - 1|`, finite for large positive ``x``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        return np.where(
            x > 0,
            x + np.log(-np.expm1(-np.abs(x))),
            np.log(np.abs(np.expm1(-np.abs(x)))),
        )


def _finish(state, log_J, beta, pi) -> LearnerPlan:
    H, S, A = state.shape
    log_W = np.zeros((H + 1, S))
    for h in range(H):
        log_W[h] = select(log_J[h], pi[h])
    state.policy = Policy(pi, A)
    state.tables = {"log_J": log_J, "log_W": log_W, "W": eu_table(log_W, beta, H)}
    return LearnerPlan(state.policy, log_W / beta, log_J / beta, state.tables)


def rovi_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Model optimism in the exponential-utility recursion.

    For every visited pair

    .. math::
        J_h(s,a) = e^{\beta r_h(s,a)} [\tilde{P}_h W_{h+1}](s,a),

    where :math:`\tilde{P}_h(\cdot|s,a)` is the most favourable row in the :math:`\ell_1` ball of
    radius :math:`c_h(s,a)` around :math:`\hat{P}_h(\cdot|s,a)`, ranked by
    :math:`\frac{1}{\beta}\log W_{h+1}`. Unvisited pairs get :math:`J = e^{\beta(H+1-h)}`. The
    greedy action maximizes :math:`\mathrm{sign}(\beta) J`.

    Args:
        state: Counts and empirical model.
        cfg: Learner configuration.
        radii: Optional radii overriding the confidence radii, shape ``(H, S, A)``.

    Returns:
        LearnerPlan: Greedy policy; ``tables`` holds ``log_J``, ``log_W`` and ``W``.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "ROVI")
    c = resolve_radii(state, cfg, radii)
    beta = cfg.beta
    H, S, A = state.shape
    top = value_range(H)
    r = state.rewards

    log_J = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    log_W_next = np.zeros(S)
    for h in range(H - 1, -1, -1):
        next_values = log_W_next / beta
        for s in range(S):
            for a in range(A):
                if state.counts[h, s, a] == 0:
                    log_J[h, s, a] = beta * top[h]
                    continue
                row = optimism_pmf(state.p_hat[h, s, a], next_values, float(c[h, s, a]))
                log_J[h, s, a] = beta * r[h, s, a] + logsumexp(log_W_next, b=row)
        pi[h] = greedy_actions(log_J[h] / beta)
        log_W_next = select(log_J[h], pi[h])

    return _finish(state, log_J, beta, pi)


def _bonus_pass(state, cfg, radii, log_multiplier) -> LearnerPlan:
    """Bonus-based recursion shared by RSVI and RSVI2.

    For ``beta > 0`` the aggregate :math:`G = e^{\\beta r}[\\hat{P} e^{\\beta V}] + b` is clipped
    at the largest achievable value. For ``beta < 0`` the bonus is subtracted and
    :math:`G` is floored at :math:`e^{\\beta(H+1-h)}`.
    """
    c = resolve_radii(state, cfg, radii)
    beta = cfg.beta
    H, S, _ = state.shape
    top = value_range(H)
    r = state.rewards

    log_J = np.empty(state.shape)
    pi = np.empty((H, S), dtype=np.int64)
    V_next = np.zeros(S)
    for h in range(H - 1, -1, -1):
        log_agg = beta * r[h] + log_backup(state.p_hat[h], beta * V_next)
        with np.errstate(divide="ignore"):
            log_b = log_multiplier(h) + np.log(c[h])
        ceiling = beta * top[h]
        if beta > 0:
            log_G = np.minimum(np.logaddexp(log_agg, log_b), ceiling)
        else:
            with np.errstate(over="ignore", divide="ignore"):
                reduced = log_agg + np.log1p(-np.exp(np.minimum(log_b - log_agg, 0.0)))
            log_G = np.where(log_b < log_agg, reduced, ceiling)
            log_G = np.maximum(log_G, ceiling)
        log_G[state.counts[h] == 0] = ceiling
        log_J[h] = log_G
        pi[h] = greedy_actions(log_G / beta)
        V_next = select(log_G, pi[h]) / beta

    return _finish(state, log_J, beta, pi)


def rsvi2_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Bonus-based learner with the doubly decaying bonus
    :math:`b_h = |e^{\beta(H+1-h)} - 1|\, c_h(s,a)`.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RSVI2")
    top = value_range(cfg.horizon)
    return _bonus_pass(state, cfg, radii, lambda h: log_abs_expm1(cfg.beta * top[h]))


def rsvi_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Bonus-based learner with the constant-multiplier bonus
    :math:`b_h = |e^{\beta H} - 1|\, c_h(s,a)`.

    Raises:
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RSVI")
    log_mult = log_abs_expm1(cfg.beta * cfg.horizon)
    return _bonus_pass(state, cfg, radii, lambda h: log_mult)


def ucbvi_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Risk-neutral optimistic value iteration with Hoeffding bonus
    :math:`\kappa (H-h)\sqrt{2\iota/\max(N,1)}` for the configured ``radius_scale`` :math:`\kappa`.

    ``radii``, if given, replaces :math:`\kappa \sqrt{2\iota/\max(N,1)}`. The returned values are
    expected returns; ``beta`` is ignored.
    """
    H, S, A = state.shape
    top = value_range(H)
    r = state.rewards
    if radii is None:
        scale = cfg.radius_scale * np.sqrt(2 * cfg.iota / np.maximum(state.counts, 1))
    else:
        scale = resolve_radii(state, cfg, radii)

    V = np.zeros((H + 1, S))
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    for h in range(H - 1, -1, -1):
        bonus = (top[h] - 1.0) * scale[h]
        Q[h] = np.minimum(top[h], r[h] + state.p_hat[h] @ V[h + 1] + bonus)
        Q[h][state.counts[h] == 0] = top[h]
        pi[h] = greedy_actions(Q[h])
        V[h] = select(Q[h], pi[h])

    state.policy = Policy(pi, A)
    state.tables = {"Q": Q}
    return LearnerPlan(state.policy, V, Q, state.tables)
