# -*- coding: utf-8 -*-

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

r"""
==============================================
Distributions (:mod:`rsdp.distributions`)
==============================================

.. currentmodule:: rsdp.distributions

This module contains the algebra of finitely supported return distributions used throughout the
package. A :class:`DiscreteDistribution` stores sorted atoms and their probabilities, and the
*entropic risk measure*

.. math::
    U_\beta(X) = \frac{1}{\beta}\log\mathbb{E}[e^{\beta X}]

is evaluated with :func:`entrm`. For :math:`\beta < 0` the measure is risk-averse, for
:math:`\beta > 0` risk-seeking, and it reduces to the mean as :math:`\beta \to 0`. The
*exponential utility* :func:`eu`, :math:`\mathbb{E}[e^{\beta X}]`, is order-equivalent to the
EntRM for a fixed sign of :math:`\beta` and linear over mixtures.

Distributional Bellman backups are composed from :func:`mix` and :func:`shift`. Optimism is
expressed either on distributions, through :func:`optimism_cdf`, which lowers the CDF by a radius
:math:`c` and moves the removed mass to the top of the support range, or on transition rows,
through :func:`optimism_pmf`, which picks the most favourable row in an :math:`\ell_1` ball.

Two-atom distributions on a fixed :class:`BernoulliSupport` are the representation of the
parametric learners. :func:`bernoulli_project` maps any distribution on the support onto this
family while preserving its exponential utility exactly.

Classes
=======

.. autosummary::
   :toctree: ../stubs/

   DiscreteDistribution
   RiskParam
   BernoulliSupport

Functions
=========

.. autosummary::
   :toctree: ../stubs/

   entrm
   eu
   log_eu
   sup_distance
   lipschitz_const
   mix
   shift
   optimism_cdf
   optimism_pmf
   bernoulli_fraction
   bernoulli_project
"""

from .discrete_distribution import (
    DiscreteDistribution,
    RiskParam,
    BernoulliSupport,
    BetaLike,
    as_beta,
    PROB_TOL,
    ATOM_TOL,
)
from .risk_functionals import entrm, eu, log_eu, sup_distance, lipschitz_const
from .operators import (
    mix,
    shift,
    optimism_cdf,
    optimism_pmf,
    bernoulli_fraction,
    bernoulli_project,
)
