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
Utility functions shared by the planners and learners.
"""

import warnings
from typing import Optional

import numpy as np
from scipy.special import logsumexp

from rsdp.mdp import TabularMDP

# relative tolerance under which two action values are treated as tied
GREEDY_TOL = 1e-10

# |beta| * H above which exponential-utility tables are not materialized
LOG_DOMAIN_THRESHOLD = 500.0


def greedy_actions(q_values: np.ndarray, tol: float = GREEDY_TOL) -> np.ndarray:
    """Greedy action per row of ``q_values`` (last axis indexes actions).

    Actions whose value is within ``tol * max(1, |best|)`` of the best are tied, and the lowest
    tied index is returned.
    """
    best = np.max(q_values, axis=-1, keepdims=True)
    slack = tol * np.maximum(1.0, np.abs(best))
    return np.argmax(q_values >= best - slack, axis=-1)


def select(table: np.ndarray, actions: np.ndarray) -> np.ndarray:
    """``table[s, actions[s]]`` for an ``(S, A)`` table."""
    return np.take_along_axis(table, actions[:, None], axis=-1)[:, 0]


def log_backup(P_h: np.ndarray, log_next: np.ndarray) -> np.ndarray:
    r"""Log of :math:`\sum_{s'} P(s'|s,a) e^{\ell(s')}` for every ``(s, a)``.

    Args:
        P_h: Transition rows of one step, shape ``(S, A, S)``.
        log_next: Log next-state values :math:`\ell`, shape ``(S,)``.

    Returns:
        np.ndarray: Array of shape ``(S, A)``.
    """
    return logsumexp(np.broadcast_to(log_next, P_h.shape), b=P_h, axis=-1)


def value_range(horizon: int) -> np.ndarray:
    """Largest achievable return ``H - h0`` from 0-based step ``h0``, for ``h0 = 0..H``."""
    return np.arange(horizon, -1, -1, dtype=float)


def exp_table(log_table: np.ndarray, name: str = "exponential utility") -> Optional[np.ndarray]:
    """Exponentiate a log-domain table, or return ``None`` with a warning if it overflows."""
    with np.errstate(over="ignore"):
        table = np.exp(log_table)
    if not np.all(np.isfinite(table)):
        warnings.warn(
            f"The {name} table is not representable in double precision; only log-domain "
            "values are available."
        )
        return None
    return table


def q_from_values(mdp: TabularMDP, values: np.ndarray, beta: float) -> np.ndarray:
    """Action values of one-step lookahead on the EntRM value table ``values`` (H+1, S)."""
    P, r = mdp.transitions, mdp.rewards
    q = np.empty(mdp.shape)
    for h in range(mdp.horizon):
        if beta == 0.0:
            q[h] = r[h] + P[h] @ values[h + 1]
        else:
            q[h] = r[h] + log_backup(P[h], beta * values[h + 1]) / beta
    return q


def eu_table(log_table: np.ndarray, beta: float, horizon: int) -> Optional[np.ndarray]:
    """Exponential-utility table from its log, or ``None`` when it cannot be stored.

    Tables are only materialized for ``|beta| * horizon <= LOG_DOMAIN_THRESHOLD`` and ``beta``
    nonzero.
    """
    if beta == 0.0:
        return None
    if abs(beta) * horizon > LOG_DOMAIN_THRESHOLD:
        warnings.warn(
            f"|beta| * H = {abs(beta) * horizon:.6g} exceeds {LOG_DOMAIN_THRESHOLD}; "
            "exponential-utility tables are kept in log domain only."
        )
        return None
    return exp_table(log_table)
