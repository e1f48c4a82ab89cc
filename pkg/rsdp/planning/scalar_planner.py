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
Scalar dynamic programming: optimal planning and policy evaluation under the entropic risk
measure.

The exponential-utility recursion

.. math::
    J_h(s,a) = e^{\beta r_h(s,a)} \sum_{s'} P_h(s'|s,a) W_{h+1}(s'), \quad W_{H+1} \equiv 1,

is run on :math:`\log W`, so that no table overflows regardless of :math:`|\beta| H`.
"""

import numpy as np

from rsdp.distributions import BetaLike, as_beta
from rsdp.mdp import TabularMDP, Policy
from .plan_result import PlanResult
from .planning_utils import greedy_actions, select, log_backup, eu_table


def risk_neutral_dp(mdp: TabularMDP) -> PlanResult:
    """Expected-return backward induction, the ``beta == 0`` limit of :func:`rs_ddp_scalar`."""
    H, S, A = mdp.shape
    P, r = mdp.transitions, mdp.rewards

    V = np.zeros((H + 1, S))
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    for h in range(H - 1, -1, -1):
        Q[h] = r[h] + P[h] @ V[h + 1]
        pi[h] = greedy_actions(Q[h])
        V[h] = select(Q[h], pi[h])

    return PlanResult(
        policy=Policy(pi, A), v_star=V, w_star=None, q_values=Q, beta=0.0, method="risk-neutral"
    )


def rs_ddp_scalar(mdp: TabularMDP, rp: BetaLike) -> PlanResult:
    """Optimal EntRM planning through the exponential-utility recursion.

    The greedy action maximizes :math:`\\mathrm{sign}(\\beta) J_h(s, a)`, equivalently the EntRM
    action value :math:`\\frac{1}{\\beta}\\log J_h(s, a)`; ties go to the lowest action index.

    Args:
        mdp: The MDP.
        rp: Risk parameter; ``beta == 0`` runs :func:`risk_neutral_dp`.

    Returns:
        PlanResult: Optimal policy with value and exponential-utility tables.
    """
    beta = as_beta(rp)
    if beta == 0.0:
        return risk_neutral_dp(mdp)

    H, S, A = mdp.shape
    P, r = mdp.transitions, mdp.rewards

    log_W = np.zeros((H + 1, S))
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    for h in range(H - 1, -1, -1):
        log_J = beta * r[h] + log_backup(P[h], log_W[h + 1])
        Q[h] = log_J / beta
        pi[h] = greedy_actions(Q[h])
        log_W[h] = select(log_J, pi[h])

    return PlanResult(
        policy=Policy(pi, A),
        v_star=log_W / beta,
        w_star=eu_table(log_W, beta, H),
        q_values=Q,
        beta=beta,
        method="scalar",
    )


def policy_eval(mdp: TabularMDP, policy: Policy, rp: BetaLike) -> np.ndarray:
    """EntRM value table :math:`V^\\pi_h(s)` of a fixed policy.

    Args:
        mdp: The MDP.
        policy: Policy of matching shape.
        rp: Risk parameter; ``beta == 0`` gives expected returns.

    Returns:
        np.ndarray: Values of shape ``(H+1, S)``, last row zero.

    Raises:
        ValidationError: If the policy does not fit the MDP.
    """
    policy.check_compatible(mdp)
    beta = as_beta(rp)
    H, S, _ = mdp.shape
    states = np.arange(S)

    V = np.zeros((H + 1, S))
    for h in range(H - 1, -1, -1):
        a = policy.actions[h]
        P_pi = mdp.transitions[h, states, a]
        r_pi = mdp.rewards[h, states, a]
        if beta == 0.0:
            V[h] = r_pi + P_pi @ V[h + 1]
        else:
            V[h] = r_pi + log_backup(P_pi[:, None, :], beta * V[h + 1])[:, 0] / beta
    return V
