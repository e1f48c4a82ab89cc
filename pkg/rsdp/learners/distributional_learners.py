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
Learners planning over full return distributions.

Both learners run a backward distributional recursion on the empirical model. Optimism is added
either to the return distributions themselves (:func:`rodi_mf_plan`) or to the transition rows
(:func:`rodi_mb_plan`). Unvisited pairs get the Dirac mass at the largest achievable return.
"""

from typing import Optional

import numpy as np

from rsdp.distributions import DiscreteDistribution, entrm, optimism_cdf, optimism_pmf
from rsdp.planning import backup_distribution, greedy_actions, value_range
from rsdp.planning.distributional_planner import check_support
from rsdp.planning.planning_utils import select
from rsdp.mdp import Policy
from .learner_state import (
    LearnerConfig,
    LearnerPlan,
    LearnerState,
    resolve_radii,
    require_risk_sensitive,
)


def _distributional_pass(state, cfg, model_backup, return_optimism=None) -> LearnerPlan:
    beta = cfg.beta
    H, S, A = state.shape
    top = value_range(H)
    r = state.rewards

    nu = [None] * (H + 1)
    eta = [None] * H
    nu[H] = [DiscreteDistribution.dirac(0.0)] * S
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)

    for h in range(H - 1, -1, -1):
        next_values = np.array([entrm(d, beta) for d in nu[h + 1]])
        eta[h] = []
        for s in range(S):
            row = []
            for a in range(A):
                if state.counts[h, s, a] == 0:
                    d = DiscreteDistribution.dirac(top[h])
                else:
                    d = model_backup(h, s, a, nu[h + 1], next_values, r[h, s, a])
                if return_optimism is not None:
                    d = return_optimism(h, s, a, d, top[h])
                check_support(d, cfg.support_cap, h + 1, s, a)
                row.append(d)
                Q[h, s, a] = entrm(d, beta)
            eta[h].append(row)
        pi[h] = greedy_actions(Q[h])
        nu[h] = [eta[h][s][pi[h, s]] for s in range(S)]

    V = np.zeros((H + 1, S))
    for h in range(H):
        V[h] = select(Q[h], pi[h])
    state.policy = Policy(pi, A)
    state.tables = {"eta": eta, "nu": nu}
    return LearnerPlan(state.policy, V, Q, state.tables)


def rodi_mf_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Distributional optimism on empirical return distributions.

    For every visited pair the empirical backup
    :math:`\eta_h(s,a) = [\hat{P}_h \nu_{h+1}](s,a)(\cdot - r_h(s,a))` is lowered in CDF by
    :math:`\min(c_h(s,a), 1)` with the removed mass moved to :math:`H+1-h`. The same lowering is
    applied to the Dirac mass of unvisited pairs, which it leaves unchanged.

    Args:
        state: Counts and empirical model.
        cfg: Learner configuration.
        radii: Optional radii overriding the confidence radii, shape ``(H, S, A)``.

    Returns:
        LearnerPlan: Greedy policy with the EntRM values of the optimistic distributions.

    Raises:
        CapacityError: If a distribution exceeds ``cfg.support_cap`` atoms.
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RODI-MF")
    c = resolve_radii(state, cfg, radii)

    def backup(h, s, a, next_dists, _next_values, reward):
        return backup_distribution(state.p_hat[h, s, a], next_dists, reward)

    def optimism(h, s, a, d, hi):
        return optimism_cdf(d, min(float(c[h, s, a]), 1.0), hi)

    return _distributional_pass(state, cfg, backup, optimism)


def rodi_mb_plan(
    state: LearnerState, cfg: LearnerConfig, radii: Optional[np.ndarray] = None
) -> LearnerPlan:
    r"""Model optimism on empirical transition rows.

    For every visited pair the row :math:`\hat{P}_h(\cdot|s,a)` is replaced by the row in its
    :math:`\ell_1` ball of radius :math:`c_h(s,a)` that maximizes the EntRM of the next-state
    return mixture, and the distributional backup is taken under that row.

    Args:
        state: Counts and empirical model.
        cfg: Learner configuration.
        radii: Optional radii overriding the confidence radii, shape ``(H, S, A)``.

    Returns:
        LearnerPlan: Greedy policy with the EntRM values of the optimistic distributions.

    Raises:
        CapacityError: If a distribution exceeds ``cfg.support_cap`` atoms.
        InvalidParameterError: If ``cfg.beta == 0``.
    """
    require_risk_sensitive(cfg, "RODI-MB")
    c = resolve_radii(state, cfg, radii)

    def backup(h, s, a, next_dists, next_values, reward):
        row = optimism_pmf(state.p_hat[h, s, a], next_values, float(c[h, s, a]))
        return backup_distribution(row, next_dists, reward)

    return _distributional_pass(state, cfg, backup)
