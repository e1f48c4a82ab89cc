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

"""
====================
rsdp (:mod:`rsdp`)
====================

.. currentmodule:: rsdp

Risk-sensitive distributional planning and learning in finite episodic MDPs under the entropic
risk measure.
"""
from .version import __version__

from .exceptions import (
    RSDPError,
    InvalidParameterError,
    ValidationError,
    NumericRangeError,
    CapacityError,
)

from .distributions.discrete_distribution import DiscreteDistribution, RiskParam
from .mdp.tabular_mdp import TabularMDP, Policy
from .planning.scalar_planner import rs_ddp_scalar, policy_eval
from .planning.distributional_planner import rs_ddp_distributional
from .learners.learner_classes import make_learner
from .experiments.experiment import ExperimentConfig, run_experiment

from . import distributions
from . import mdp
from . import planning
from . import learners
from . import experiments
