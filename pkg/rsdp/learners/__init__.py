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
Learners (:mod:`rsdp.learners`)
==================================

.. currentmodule:: rsdp.learners

This module contains episodic learners for an unknown :class:`~rsdp.mdp.TabularMDP` with known
rewards. Every learner keeps a :class:`LearnerState` of visit counts :math:`N_h(s,a)` and the
empirical transition model :math:`\hat{P}_h(\cdot|s,a)`, uniform on unvisited pairs, and before
each episode runs a backward planning pass that is optimistic inside the confidence radius

.. math::
    c_h(s,a) = \sqrt{\frac{2S\iota}{\max(N_h(s,a), 1)}}, \quad
    \iota = \log(2SAT/\delta),

with :math:`T = KH`. Unvisited pairs are assigned the largest achievable return
:math:`H+1-h` by every learner.

The learners differ in where optimism enters:

* ``"rodi-mf"`` (:func:`rodi_mf_plan`) lowers the CDF of each empirical return distribution.
* ``"rodi-mb"`` (:func:`rodi_mb_plan`) and ``"rovi"`` (:func:`rovi_plan`) pick the most
  favourable transition row in an :math:`\ell_1` ball, over distributions and over exponential
  utilities respectively; both produce the same policies.
* ``"rodi-otp"`` and ``"rodi-pto"`` (:func:`rodi_otp_plan`, :func:`rodi_pto_plan`) work with
  two-atom return representations and apply optimism before or after the projection.
* ``"rsvi2"`` and ``"rsvi"`` (:func:`rsvi2_plan`, :func:`rsvi_plan`) add exploration bonuses
  to the exponential-utility backup.
* ``"ucbvi"`` (:func:`ucbvi_plan`) is risk-neutral optimistic value iteration.

:func:`make_learner` builds a :class:`Learner` from these selector strings, plus ``"oracle"``
for a learner playing the true optimal policy. :func:`compare_planners` runs several planning
passes on shared counts and :func:`check_value_chain` checks the ordering of their values.

Classes
=======

.. autosummary::
   :toctree: ../stubs/

   LearnerConfig
   LearnerState
   LearnerPlan
   Learner
   PlanningLearner
   OracleLearner
   ValueComparison

Functions
=========

.. autosummary::
   :toctree: ../stubs/

   make_learner
   optimism_radius
   confidence_radii
   exact_radii
   good_event_holds
   rodi_mf_plan
   rodi_mb_plan
   rovi_plan
   rodi_otp_plan
   rodi_pto_plan
   rsvi2_plan
   rsvi_plan
   ucbvi_plan
   compare_planners
   check_value_chain
   sample_count_snapshot
   save_count_snapshot
   load_count_snapshot
"""

from .learner_state import (
    LearnerConfig,
    LearnerState,
    LearnerPlan,
    IOTA_MODES,
    optimism_radius,
    confidence_radii,
    exact_radii,
    good_event_holds,
    sample_count_snapshot,
    save_count_snapshot,
    load_count_snapshot,
)
from .distributional_learners import rodi_mf_plan, rodi_mb_plan
from .value_learners import rovi_plan, rsvi2_plan, rsvi_plan, ucbvi_plan
from .representation_learners import rodi_otp_plan, rodi_pto_plan, projection_coefficients
from .learner_classes import (
    Learner,
    PlanningLearner,
    OracleLearner,
    ALGORITHMS,
    RISK_NEUTRAL_OK,
    available_algorithms,
    make_learner,
)
from .comparison import (
    COMPARED_ALGORITHMS,
    ValueComparison,
    compare_planners,
    check_value_chain,
)
