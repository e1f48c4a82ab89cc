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
Operators acting on discrete distributions and transition rows.
"""

from typing import Optional, Sequence, Union

import numpy as np

from rsdp.exceptions import InvalidParameterError
from .discrete_distribution import (
    DiscreteDistribution,
    BernoulliSupport,
    BetaLike,
    as_beta,
    PROB_TOL,
    ATOM_TOL,
)

# relative tolerance used to detect tied state values in optimism_pmf
TIE_RTOL = 1e-12


def mix(weights, dists: Sequence[DiscreteDistribution]) -> DiscreteDistribution:
    r"""Mixture :math:`\sum_i w_i F_i` of distributions.

    Args:
        weights: Probability vector of mixture weights.
        dists: Distributions, one per weight.

    Returns:
        DiscreteDistribution: The mixture, with merged and re-sorted support.

    Raises:
        InvalidParameterError: If the weights are not a probability vector or the lengths differ.
    """
    weights = np.asarray(weights, dtype=float).reshape(-1)
    if len(weights) != len(dists):
        raise InvalidParameterError(
            f"Got {len(weights)} weights for {len(dists)} distributions."
        )
    if np.any(weights < -PROB_TOL) or abs(weights.sum() - 1.0) > PROB_TOL:
        raise InvalidParameterError("Mixture weights must lie on the probability simplex.")

    active = np.flatnonzero(weights > 0.0)
    if len(active) == 1:
        return dists[active[0]]

    atoms = np.concatenate([dists[i].atoms for i in active])
    probs = np.concatenate([weights[i] * dists[i].probs for i in active])
    return DiscreteDistribution._from_arrays(atoms, probs)


def shift(d: DiscreteDistribution, c: float) -> DiscreteDistribution:
    """Translate every atom of ``d`` by ``c``."""
    if c == 0.0:
        return d
    return DiscreteDistribution._from_arrays(d.atoms + c, d.probs)


def optimism_cdf(d: DiscreteDistribution, c: float, support_hi: float) -> DiscreteDistribution:
    r"""Distributional optimism operator.

    Lowers the CDF by ``c`` below ``support_hi``, :math:`x \mapsto [F(x) - c]^+`, and places the
    removed mass on the atom ``support_hi``. The result stochastically dominates every
    distribution within supremum distance ``c`` of ``d`` supported below ``support_hi``.

    Args:
        d: Distribution with all atoms at most ``support_hi``.
        c: Radius in :math:`[0, 1]`.
        support_hi: Top of the support range.

    Returns:
        DiscreteDistribution: The optimistic distribution.

    Raises:
        InvalidParameterError: If ``c`` is outside :math:`[0, 1]` or an atom exceeds
            ``support_hi``.
    """
    if not 0.0 <= c <= 1.0:
        raise InvalidParameterError(f"Optimism radius must lie in [0, 1], got {c}.")
    if d.atoms[-1] > support_hi + ATOM_TOL:
        raise InvalidParameterError(
            f"Atom {d.atoms[-1]} exceeds the support range top {support_hi}."
        )
    if c == 0.0:
        return d

    below = d.atoms < support_hi - ATOM_TOL
    lowered = np.clip(np.cumsum(d.probs[below]) - c, 0.0, None)
    probs = np.diff(lowered, prepend=0.0)
    top_mass = 1.0 - (lowered[-1] if len(lowered) else 0.0)

    atoms = np.append(d.atoms[below], support_hi)
    probs = np.append(probs, top_mass)
    return DiscreteDistribution._from_arrays(atoms, probs)


def optimism_pmf(
    p_hat, entrm_values, c: float, tie_tol: Optional[float] = None
) -> np.ndarray:
    r"""Model optimism operator over the :math:`\ell_1` ball around a transition row.

    Returns the row inside :math:`B_1(\hat{p}, c)` intersected with the simplex that maximizes the
    risk of the induced mixture of next-state returns. Up to ``c / 2`` mass is drained from the
    states with the lowest values, lowest first, and moved to the single best state.

    Ties between values within ``tie_tol`` are treated as equal values. Within a tie group the
    lower state index is drained first and the recipient is the largest index of the top group.

    Args:
        p_hat: Empirical transition row.
        entrm_values: Risk value of the return from each next state.
        c: :math:`\ell_1` radius, nonnegative.
        tie_tol: Absolute tolerance for tied values. Defaults to ``TIE_RTOL`` scaled by the
            largest absolute value.

    Returns:
        np.ndarray: The optimistic row.

    Raises:
        InvalidParameterError: If ``c`` is negative or the shapes differ.
    """
    p = np.array(p_hat, dtype=float)
    values = np.asarray(entrm_values, dtype=float)
    if p.shape != values.shape:
        raise InvalidParameterError("p_hat and entrm_values must have the same shape.")
    if c < 0:
        raise InvalidParameterError(f"Optimism radius must be nonnegative, got {c}.")
    if c == 0.0 or len(p) == 1:
        return p

    if tie_tol is None:
        tie_tol = TIE_RTOL * max(1.0, float(np.max(np.abs(values))))

    order = np.argsort(values, kind="stable")
    sorted_values = values[order]
    group = np.cumsum(np.concatenate(([0], np.diff(sorted_values) > tie_tol)))
    # stable sort keeps indices ascending inside each group
    best = order[np.flatnonzero(group == group[-1])[-1]]

    budget = min(0.5 * c, 1.0 - p[best])
    if budget <= 0.0:
        return p

    donors = order[order != best]
    available = p[donors]
    taken_before = np.cumsum(available) - available
    take = np.clip(budget - taken_before, 0.0, available)

    p[donors] -= take
    p[best] += take.sum()
    return p


def bernoulli_fraction(
    c: Union[float, np.ndarray], support: BernoulliSupport, rp: BetaLike
) -> Union[float, np.ndarray]:
    r"""Weight :math:`q(c; \theta)` of the right atom of the two-atom distribution on
    ``support`` whose exponential utility equals :math:`e^{\beta c}`.

    .. math::
        q(c; \theta) = \frac{e^{\beta c} - e^{\beta\theta_1}}{e^{\beta\theta_2} - e^{\beta\theta_1}}

    The ratio is evaluated with ``expm1`` in a form that stays finite for large
    :math:`|\beta|(\theta_2 - \theta_1)`. For ``beta == 0`` the linear limit is returned.
    """
    beta = as_beta(rp)
    c = np.asarray(c, dtype=float)
    width = support.width
    if beta == 0.0:
        out = (c - support.theta1) / width
    elif beta > 0.0:
        # e^{beta(c - theta2)} (1 - e^{-beta(c - theta1)}) / (1 - e^{-beta width})
        out = (
            np.exp(beta * (c - support.theta2))
            * np.expm1(-beta * (c - support.theta1))
            / np.expm1(-beta * width)
        )
    else:
        out = np.expm1(beta * (c - support.theta1)) / np.expm1(beta * width)

    out = np.clip(out, 0.0, 1.0)
    if out.ndim == 0:
        return float(out)
    return out


def bernoulli_project(
    d: DiscreteDistribution, support: BernoulliSupport, rp: BetaLike
) -> DiscreteDistribution:
    r"""Value-equivalent projection of ``d`` onto two-atom distributions on ``support``.

    Returns :math:`(\theta_1, \theta_2; q)` with :math:`q = \sum_i p_i q(x_i; \theta)`, which has
    the same exponential utility, hence the same EntRM, as ``d``.

    Raises:
        InvalidParameterError: If ``beta == 0`` or an atom lies outside the support.
    """
    beta = as_beta(rp)
    if beta == 0.0:
        raise InvalidParameterError("The value-equivalent projection requires beta != 0.")
    if d.atoms[0] < support.theta1 - ATOM_TOL or d.atoms[-1] > support.theta2 + ATOM_TOL:
        raise InvalidParameterError(
            f"Atoms must lie in [{support.theta1}, {support.theta2}] for the projection."
        )

    q = float(np.dot(d.probs, bernoulli_fraction(d.atoms, support, beta)))
    q = min(max(q, 0.0), 1.0)
    return DiscreteDistribution._from_arrays(
        np.array([support.theta1, support.theta2]), np.array([1.0 - q, q])
    )
