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
Episodic learner objects and the algorithm registry.
"""

from abc import ABC, abstractmethod
from typing import Callable, Dict, Optional

import numpy as np

from rsdp.exceptions import InvalidParameterError
from rsdp.mdp import TabularMDP, Policy, Trajectory
from rsdp.planning import rs_ddp_scalar
from .learner_state import LearnerConfig, LearnerPlan, LearnerState, exact_radii
from .distributional_learners import rodi_mf_plan, rodi_mb_plan
from .value_learners import rovi_plan, rsvi_plan, rsvi2_plan, ucbvi_plan
from .representation_learners import rodi_otp_plan, rodi_pto_plan

PlanFunction = Callable[[LearnerState, LearnerConfig, Optional[np.ndarray]], LearnerPlan]

ALGORITHMS: Dict[str, PlanFunction] = {
    "rodi-mf": rodi_mf_plan,
    "rodi-mb": rodi_mb_plan,
    "rovi": rovi_plan,
    "rodi-otp": rodi_otp_plan,
    "rodi-pto": rodi_pto_plan,
    "rsvi2": rsvi2_plan,
    "rsvi": rsvi_plan,
    "ucbvi": ucbvi_plan,
}

# learners that can run with beta == 0
RISK_NEUTRAL_OK = ("ucbvi", "oracle")


class Learner(ABC):
    """An episodic learner: plans a policy, then observes the episode played with it."""

    name: str = ""

    def __init__(self, mdp: TabularMDP, config: LearnerConfig):
        """Initialize.

        Args:
            mdp: Environment; learners only read its shape and known rewards, except where
                stated otherwise.
            config: Learner configuration with sizes matching ``mdp``.

        Raises:
            InvalidParameterError: If the configuration does not match the MDP.
        """
        H, S, A = mdp.shape
        if (config.horizon, config.num_states, config.num_actions) != (H, S, A):
            raise InvalidParameterError(
                f"LearnerConfig sizes (H={config.horizon}, S={config.num_states}, "
                f"A={config.num_actions}) do not match the MDP {mdp.shape}."
            )
        self.config = config
        self.state = LearnerState(mdp.rewards)

    @abstractmethod
    def plan(self) -> LearnerPlan:
        """Compute the policy for the next episode."""

    def observe(self, trajectory: Trajectory):
        """Update the learner with one episode."""
        self.state.observe(trajectory)

    @property
    def policy(self) -> Optional[Policy]:
        """Policy of the latest planning pass."""
        return self.state.policy


class PlanningLearner(Learner):
    """Learner running one of the registered planning passes every episode."""

    def __init__(
        self,
        name: str,
        mdp: TabularMDP,
        config: LearnerConfig,
        exact_radii_mdp: Optional[TabularMDP] = None,
    ):
        """Initialize.

        Args:
            name: Key of :data:`ALGORITHMS`.
            mdp: Environment.
            config: Learner configuration.
            exact_radii_mdp: If given, the confidence radii are replaced every episode by the
                true errors :math:`\\|\\hat{P} - P\\|_1` measured against this MDP.

        Raises:
            InvalidParameterError: For an unknown name, or ``beta == 0`` with a risk-sensitive
                algorithm.
        """
        if name not in ALGORITHMS:
            raise InvalidParameterError(
                f"Unknown algorithm {name!r}; expected one of {sorted(ALGORITHMS)}."
            )
        if config.beta == 0.0 and name not in RISK_NEUTRAL_OK:
            raise InvalidParameterError(f"Algorithm {name!r} requires a nonzero beta.")
        super().__init__(mdp, config)
        self.name = name
        self._plan_fn = ALGORITHMS[name]
        self._exact_radii_mdp = exact_radii_mdp

    def plan(self) -> LearnerPlan:
        radii = None
        if self._exact_radii_mdp is not None:
            radii = exact_radii(self._exact_radii_mdp, self.state)
        return self._plan_fn(self.state, self.config, radii)


class OracleLearner(Learner):
    """Reference learner that always plays the optimal policy of the true MDP."""

    name = "oracle"

    def __init__(self, mdp: TabularMDP, config: LearnerConfig):
        super().__init__(mdp, config)
        result = rs_ddp_scalar(mdp, config.beta)
        self._plan = LearnerPlan(
            result.policy, result.v_star, result.q_values, {"w_star": result.w_star}
        )

    def plan(self) -> LearnerPlan:
        self.state.policy = self._plan.policy
        return self._plan


def available_algorithms():
    """Selector strings accepted by :func:`make_learner`."""
    return list(ALGORITHMS) + ["oracle"]


def make_learner(
    name: str,
    mdp: TabularMDP,
    config: LearnerConfig,
    exact_radii_mdp: Optional[TabularMDP] = None,
) -> Learner:
    """Construct a learner from its selector string.

    Raises:
        InvalidParameterError: For an unknown name or an unsupported ``beta``.
    """
    if name == "oracle":
        return OracleLearner(mdp, config)
    return PlanningLearner(name, mdp, config, exact_radii_mdp=exact_radii_mdp)