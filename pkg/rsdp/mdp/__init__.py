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
================================
MDPs (:mod:`rsdp.mdp`)
================================

.. currentmodule:: rsdp.mdp

This module contains the finite-horizon episodic MDP model used by the planners and learners. A
:class:`TabularMDP` with :math:`S` states, :math:`A` actions and horizon :math:`H` holds the
transition kernels :math:`P_h(\cdot|s,a)` and deterministic rewards :math:`r_h(s,a) \in [0,1]`
for every step :math:`h = 1, \dots, H`, stored 0-based along the first axis. A
:class:`Policy` maps every step and state to an action, and :func:`simulate_episode` rolls one
out into a :class:`Trajectory`.

Randomness is drawn from ``numpy`` generators backed by the counter-based ``Philox`` bit
generator. :func:`episode_rng` returns the independent stream of one episode of one seed, which
makes experiments reproducible regardless of the order in which episodes are simulated.

Two instance families are provided. :func:`make_risky_mdp` builds the experiment MDP where
several risky actions have a higher mean return than one safe action, so that risk-averse and
risk-neutral optimal policies disagree. :func:`make_hard_mdp` builds the tree-structured
instances of :class:`HardInstanceSpec`, whose optimal EntRM value is known in closed form.

MDPs are stored as JSON objects ``{"S", "A", "H", "initial_state", "P", "r"}`` through
:func:`save_mdp` and :func:`load_mdp`.

Classes
=======

.. autosummary::
   :toctree: ../stubs/

   TabularMDP
   Policy
   Trajectory
   TrajectoryStep
   HardInstanceSpec

Functions
=========

.. autosummary::
   :toctree: ../stubs/

   simulate_episode
   episode_rng
   make_rng
   make_risky_mdp
   make_hard_mdp
   save_mdp
   load_mdp
   mdp_to_dict
   mdp_from_dict
"""

from .tabular_mdp import (
    TabularMDP,
    Policy,
    Trajectory,
    TrajectoryStep,
    mdp_to_dict,
    mdp_from_dict,
    save_mdp,
    load_mdp,
)
from .simulation import make_rng, episode_rng, sample_next_state, simulate_episode
from .instances import make_risky_mdp, HardInstanceSpec, make_hard_mdp
