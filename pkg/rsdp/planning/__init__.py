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
==================================
Planning (:mod:`rsdp.planning`)
==================================

.. currentmodule:: rsdp.planning

This module contains exact oracles for risk-sensitive planning in a known
:class:`~rsdp.mdp.TabularMDP`. The optimal EntRM values satisfy both a *distributional* Bellman
optimality equation over return distributions,

.. math::
    \eta^*_h(s,a) = [P_h\nu^*_{h+1}](s,a)(\cdot - r_h(s,a)), \quad
    \nu^*_h(s) = \eta^*_h(s, \pi^*_h(s)),

solved by :func:`rs_ddp_distributional`, and a *scalar* one over exponential utilities,

.. math::
    J^*_h(s,a) = e^{\beta r_h(s,a)} [P_h W^*_{h+1}](s,a), \quad
    W^*_h(s) = J^*_h(s, \pi^*_h(s)),

solved by :func:`rs_ddp_scalar`. The two give the same optimal values, and the greedy actions
maximize :math:`\mathrm{sign}(\beta) J^*_h(s,a)`. Ties between actions go to the lowest index
everywhere in the package.

The distributional planner keeps every atom, so support sizes may grow exponentially with the
horizon. A support cap turns this growth into a :class:`~rsdp.exceptions.CapacityError` naming
the offending step, state and action.

:func:`policy_eval` evaluates a fixed policy, :func:`policy_return_distribution` returns its full
return distributions, and :func:`brute_force_optimal` enumerates every deterministic Markov
policy of a tiny MDP as ground truth. For :math:`\beta = 0` planning falls back to
:func:`risk_neutral_dp`.

Classes
=======

.. autosummary::
   :toctree: ../stubs/

   PlanResult

Functions
=========

.. autosummary::
   :toctree: ../stubs/

   rs_ddp_scalar
   rs_ddp_distributional
   risk_neutral_dp
   policy_eval
   policy_return_distribution
   brute_force_optimal
   brute_force_value
   greedy_actions
"""

from .plan_result import PlanResult
from .planning_utils import greedy_actions, log_backup, value_range, LOG_DOMAIN_THRESHOLD
from .scalar_planner import risk_neutral_dp, rs_ddp_scalar, policy_eval
from .distributional_planner import (
    rs_ddp_distributional,
    policy_return_distribution,
    backup_distribution,
    DEFAULT_SUPPORT_CAP,
)
from .brute_force import brute_force_optimal, brute_force_value, MAX_POLICIES
