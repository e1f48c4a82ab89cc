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
========================================
Experiments (:mod:`rsdp.experiments`)
========================================

.. currentmodule:: rsdp.experiments

This module runs regret experiments. For every algorithm and seed of an
:class:`ExperimentConfig`, :func:`run_experiment` creates a fresh learner and, in every episode
:math:`k`, records the EntRM regret

.. math::
    V^*_1(s_1) - V^{\pi^k}_1(s_1)

of the planned policy :math:`\pi^k`, evaluated exactly, before playing it for one episode. The
optimal value comes from the scalar planner. The environment stream of episode :math:`k` depends
only on the seed and :math:`k`, so all algorithms face the same randomness for a given seed, and
results do not depend on how runs are scheduled over worker processes.

Records are written with :func:`emit_csv` under the header
``algo,seed,episode,v_star,v_pik,per_episode_regret,cum_regret`` and read back with
:func:`load_csv`. :func:`aggregate` averages cumulative regret across seeds and
:func:`emit_plot` draws the averaged curves as an SVG line chart.

Classes
=======

.. autosummary::
   :toctree: ../stubs/

   ExperimentConfig
   RegretRecord
   AggregatedCurve

Functions
=========

.. autosummary::
   :toctree: ../stubs/

   run_experiment
   run_cell
   aggregate
   emit_csv
   load_csv
   emit_plot
"""

from .experiment import (
    DEFAULT_RADIUS_SCALE,
    ExperimentConfig,
    RegretRecord,
    GENERATORS,
    resolve_workers,
    run_cell,
    run_experiment,
)
from .results import (
    AggregatedCurve,
    CSV_COLUMNS,
    records_to_frame,
    emit_csv,
    load_csv,
    aggregate,
    emit_plot,
)
