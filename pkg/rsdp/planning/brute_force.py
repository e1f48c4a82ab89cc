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
Exhaustive search over deterministic Markov policies, the ground truth on tiny MDPs.
"""

import numpy as np
from scipy.special import logsumexp

from rsdp.distributions import BetaLike, as_beta
from rsdp.exceptions import CapacityError, InvalidParameterError
from rsdp.mdp import TabularMDP, Policy
from .plan_result import PlanResult
from .planning_utils import eu_table, q_from_values
from .scalar_planner import policy_eval

MAX_POLICIES = 10**7

# number of policies evaluated per vectorized batch
_BATCH = 4096


def _enumerate(index: np.ndarray, num_actions: int, num_entries: int) -> np.ndarray:
    """Digits of ``index`` in base ``num_actions``, most significant first."""
    powers = num_actions ** np.arange(num_entries - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // powers) % num_actions


def _batch_values(
    mdp: TabularMDP, tails: np.ndarray, beta: float, start: int, state: int
) -> np.ndarray:
    """Value at ``(start, state)`` of a batch of tail policies ``(N, H - start, S)``."""
    H, S, _ = mdp.shape
    n = tails.shape[0]
    states = np.arange(S)
    V = np.zeros((n, S))
    for h in range(H - 1, start - 1, -1):
        a = tails[:, h - start, :]
        P_pi = mdp.transitions[h, states[None, :], a]
        r_pi = mdp.rewards[h, states[None, :], a]
        if beta == 0.0:
            V = r_pi + np.einsum("nst,nt->ns", P_pi, V)
        else:
            log_next = np.broadcast_to((beta * V)[:, None, :], P_pi.shape)
            V = r_pi + logsumexp(log_next, b=P_pi, axis=-1) / beta
    return V[:, state]


def brute_force_value(
    mdp: TabularMDP,
    rp: BetaLike,
    h: int = 1,
    state: int = None,
    max_policies: int = MAX_POLICIES,
):
    """Best value at 1-based step ``h`` and ``state`` over all tail policies from step ``h``.

    Returns:
        tuple: ``(value, actions)`` with the lexicographically first optimal tail policy as an
        array of shape ``(H - h + 1, S)``.

    Raises:
        CapacityError: If more than ``max_policies`` policies would be enumerated.
        InvalidParameterError: If ``h`` or ``state`` is out of range.
    """
    beta = as_beta(rp)
    H, S, A = mdp.shape
    state = mdp.initial_state if state is None else int(state)
    if not 1 <= h <= H or not 0 <= state < S:
        raise InvalidParameterError(f"(h={h}, s={state}) is outside the MDP.")

    start = h - 1
    entries = (H - start) * S
    total = A**entries
    if total > max_policies:
        raise CapacityError(
            f"Exhaustive search needs {A}^{entries} = {total} policies, more than {max_policies}."
        )

    best_value, best_index = -np.inf, 0
    for lo in range(0, total, _BATCH):
        index = np.arange(lo, min(lo + _BATCH, total), dtype=np.int64)
        tails = _enumerate(index, A, entries).reshape(-1, H - start, S)
        values = _batch_values(mdp, tails, beta, start, state)
        top = values.max()
        i = int(np.argmax(values >= top - 1e-12 * max(1.0, abs(top))))
        # strict improvement keeps the lexicographically first optimum
        if lo == 0 or values[i] > best_value + 1e-12 * max(1.0, abs(best_value)):
            best_value, best_index = float(values[i]), int(index[i])

    actions = _enumerate(np.array([best_index]), A, entries).reshape(H - start, S)
    return best_value, actions


def brute_force_optimal(
    mdp: TabularMDP, rp: BetaLike, max_policies: int = MAX_POLICIES
) -> PlanResult:
    """Optimal policy for the initial state by enumerating all deterministic Markov policies.

    Ties between policies are broken in favour of the lexicographically first action table.

    Args:
        mdp: The MDP.
        rp: Risk parameter.
        max_policies: Enumeration guard on :math:`A^{SH}`.

    Returns:
        PlanResult: The best policy and its value tables.

    Raises:
        CapacityError: If :math:`A^{SH}` exceeds ``max_policies``.
    """
    beta = as_beta(rp)
    _, actions = brute_force_value(mdp, beta, 1, mdp.initial_state, max_policies)
    policy = Policy(actions, mdp.num_actions)
    V = policy_eval(mdp, policy, beta)
    return PlanResult(
        policy=policy,
        v_star=V,
        w_star=eu_table(beta * V, beta, mdp.horizon),
        q_values=q_from_values(mdp, V, beta),
        beta=beta,
        method="brute-force",
    )
