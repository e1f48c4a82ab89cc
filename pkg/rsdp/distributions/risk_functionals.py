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
Risk functionals of discrete distributions.

The entropic risk measure of a return :math:`X \sim F` with risk parameter :math:`\beta` is

.. math::
    U_\beta(F) = \frac{1}{\beta} \log \mathbb{E}[e^{\beta X}],

and the exponential utility is :math:`E_\beta(F) = e^{\beta U_\beta(F)}`. Both are evaluated in
log-sum-exp form.
"""

import numpy as np
from scipy.special import logsumexp

from rsdp.exceptions import InvalidParameterError, NumericRangeError
from .discrete_distribution import DiscreteDistribution, BetaLike, as_beta


def log_eu(d: DiscreteDistribution, rp: BetaLike) -> float:
    r"""Return :math:`\log \sum_i p_i e^{\beta x_i}`."""
    beta = as_beta(rp)
    return float(logsumexp(beta * d.atoms, b=d.probs))


def entrm(d: DiscreteDistribution, rp: BetaLike) -> float:
    r"""Entropic risk measure of ``d``.

    For ``beta == 0`` the risk-neutral limit, the mean, is returned.

    Args:
        d: The distribution.
        rp: Risk parameter.

    Returns:
        float: :math:`\frac{1}{\beta}\log\sum_i p_i e^{\beta x_i}`.

    Raises:
        NumericRangeError: If the result is not finite.
    """
    beta = as_beta(rp)
    if beta == 0.0:
        return d.mean()

    value = log_eu(d, beta) / beta
    if not np.isfinite(value):
        raise NumericRangeError(f"EntRM evaluation is not finite for beta={beta}.")
    return value


def eu(d: DiscreteDistribution, rp: BetaLike) -> float:
    r"""Exponential utility :math:`\sum_i p_i e^{\beta x_i}` of ``d``.

    Raises:
        InvalidParameterError: If ``beta == 0``.
        NumericRangeError: If the result overflows.
    """
    beta = as_beta(rp)
    if beta == 0.0:
        raise InvalidParameterError("Exponential utility is undefined for beta=0.")

    value = float(np.exp(log_eu(d, beta)))
    if not np.isfinite(value):
        raise NumericRangeError(f"Exponential utility overflows for beta={beta}.")
    return value


def sup_distance(f: DiscreteDistribution, g: DiscreteDistribution) -> float:
    """Supremum distance between the CDFs of ``f`` and ``g``.

    Both CDFs are right-continuous step functions, so the supremum is attained on the union of
    the atoms.
    """
    grid = np.union1d(f.atoms, g.atoms)
    return float(np.max(np.abs(f.cdf(grid) - g.cdf(grid))))


def lipschitz_const(rp: BetaLike, m: float) -> float:
    r"""Lipschitz constant :math:`|e^{\beta M} - 1|` of the exponential utility on :math:`[0, M]`
    with respect to the supremum distance.

    Raises:
        InvalidParameterError: If ``beta == 0`` or ``m < 0``.
    """
    beta = as_beta(rp)
    if beta == 0.0:
        raise InvalidParameterError("The Lipschitz constant is undefined for beta=0.")
    if m < 0:
        raise InvalidParameterError(f"The support bound must be nonnegative, got {m}.")
    return float(abs(np.expm1(beta * m)))
