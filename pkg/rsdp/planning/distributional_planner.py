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
Distributional dynamic programming over full return distributions.

The backward recursion

.. math::
    \nu_{H+1}(s) = \delta_0, \quad
    \eta_h(s,a) = \Big[\sum_{s'} P_h(s'|s,a)\,\nu_{h+1}(s')\Big](\cdot - r_h(s,a)), \quad
    \nu_h(s) = \eta_h(s, \pi_h(s)),

keeps every return distribution exactly. Support sizes can grow exponentially with the horizon,
so every backup is checked against a support cap.
"""

import logging
from typing import List

import numpy as np

from rsdp.distributions import DiscreteDistribution, BetaLike, as_beta, entrm, mix, shift
from rsdp.exceptions import CapacityError, InvalidParameterError
from rsdp.mdp import TabularMDP, Policy
from .plan_result import PlanResult
from .planning_utils import greedy_actions, select, eu_table

logger = logging.getLogger(__name__)

DEFAULT_SUPPORT_CAP = 200_000


def backup_distribution(
    row: np.ndarray, next_dists: List[DiscreteDistribution], reward: float
) -> DiscreteDistribution:
    """Distributional Bellman backup ``[row . next_dists](. - reward)`` of one state-action pair."""
    return shift(mix(row, next_dists), reward)


def check_support(d: DiscreteDistribution, support_cap: int, h: int, s: int, a: int):
    """Raise if ``d`` has more atoms than ``support_cap``; ``h`` is 1-based.

    Raises:
        CapacityError: If the cap is exceeded.
    """
    if len(d) > support_cap:
        raise CapacityError(
            f"Return distribution at (h={h}, s={s}, a={a}) has {len(d)} atoms, "
            f"exceeding the support cap {support_cap}."
        )


def _validate_cap(support_cap: int):
    if support_cap < 2:
        raise InvalidParameterError(f"support_cap must be at least 2, got {support_cap}.")


def rs_ddp_distributional(
    mdp: TabularMDP, rp: BetaLike, support_cap: int = DEFAULT_SUPPORT_CAP
) -> PlanResult:
    """Optimal EntRM planning over return distributions.

    Args:
        mdp: The MDP.
        rp: Risk parameter; ``beta == 0`` ranks actions by their mean return.
        support_cap: Largest number of atoms allowed in any return distribution.

    Returns:
        PlanResult: Optimal policy, values and the full ``eta``/``nu`` tables.

    Raises:
        CapacityError: If a return distribution exceeds ``support_cap`` atoms.
        InvalidParameterError: If ``support_cap < 2``.
    """
    _validate_cap(support_cap)
    beta = as_beta(rp)
    H, S, A = mdp.shape
    P, r = mdp.transitions, mdp.rewards

    nu = [None] * (H + 1)
    eta = [None] * H
    nu[H] = [DiscreteDistribution.dirac(0.0)] * S
    Q = np.empty((H, S, A))
    pi = np.empty((H, S), dtype=np.int64)
    max_support = 1

    for h in range(H - 1, -1, -1):
        eta[h] = []
        for s in range(S):
            row_dists = []
            for a in range(A):
                d = backup_distribution(P[h, s, a], nu[h + 1], r[h, s, a])
                check_support(d, support_cap, h + 1, s, a)
                max_support = max(max_support, len(d))
                row_dists.append(d)
                Q[h, s, a] = entrm(d, beta)
            eta[h].append(row_dists)

        pi[h] = greedy_actions(Q[h])
        nu[h] = [eta[h][s][pi[h, s]] for s in range(S)]
        logger.debug("Step %d planned, largest support so far %d.", h + 1, max_support)

    V = np.zeros((H + 1, S))
    for h in range(H):
        V[h] = select(Q[h], pi[h])

    return PlanResult(
        policy=Policy(pi, A),
        v_star=V,
        w_star=eu_table(beta * V, beta, H),
        q_values=Q,
        beta=beta,
        method="distributional",
        eta=eta,
        nu=nu,
        max_support=max_support,
    )


def policy_return_distribution(
    mdp: TabularMDP, policy: Policy, support_cap: int = DEFAULT_SUPPORT_CAP
) -> List[List[DiscreteDistribution]]:
    """Return distributions :math:`\\nu^\\pi_h(s)` of a fixed policy.

    Returns:
        list: ``H+1`` rows of ``S`` distributions; the last row is :math:`\\delta_0`.

    Raises:
        CapacityError: If a return distribution exceeds ``support_cap`` atoms.
    """
    _validate_cap(support_cap)
    policy.check_compatible(mdp)
    H, S, _ = mdp.shape
    P, r = mdp.transitions, mdp.rewards

    nu = [None] * (H + 1)
    nu[H] = [DiscreteDistribution.dirac(0.0)] * S
    for h in range(H - 1, -1, -1):
        row = []
        for s in range(S):
            a = int(policy.actions[h, s])
            d = backup_distribution(P[h, s, a], nu[h + 1], r[h, s, a])
            check_support(d, support_cap, h + 1, s, a)
            row.append(d)
        nu[h] = row
    return nu
