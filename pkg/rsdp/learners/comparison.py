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
Side-by-side planning passes on shared counts and the ordering of their value tables.
"""

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from rsdp.mdp import TabularMDP
from rsdp.planning import rs_ddp_scalar
from .learner_state import LearnerConfig, LearnerState
from .learner_classes import ALGORITHMS

COMPARED_ALGORITHMS = ("rsvi", "rsvi2", "rodi-mf", "rodi-mb", "rovi", "rodi-otp", "rodi-pto")

# (larger, smaller) pairs of the value ordering; the last two only hold for beta > 0
VALUE_CHAIN = (
    ("rsvi", "rsvi2"),
    ("rsvi2", "rodi-mf"),
    ("rodi-mf", "rodi-mb"),
    ("rodi-mb", "optimal"),
)
REPRESENTATION_CHAIN = (
    ("rodi-pto", "rodi-otp"),
    ("rsvi2", "rodi-pto"),
)


@dataclass
class ValueComparison:
    """Value tables of several learners planned on the same counts.

    Attributes:
        beta: Risk parameter.
        values: Map from algorithm name (and ``"optimal"`` if the true MDP was given) to a value
            table of shape ``(H+1, S)``.
        initial_state: State whose step-1 values are reported by :meth:`initial_values`.
    """

    beta: float
    values: Dict[str, np.ndarray]
    initial_state: int = 0

    def initial_values(self) -> Dict[str, float]:
        """Step-1 value at the initial state per algorithm."""
        return {name: float(v[0, self.initial_state]) for name, v in self.values.items()}


def compare_planners(
    state: LearnerState,
    cfg: LearnerConfig,
    mdp: Optional[TabularMDP] = None,
    algorithms=COMPARED_ALGORITHMS,
    radii: Optional[np.ndarray] = None,
) -> ValueComparison:
    """Run every planning pass on the same counts.

    Args:
        state: Shared counts and empirical model; not modified.
        cfg: Learner configuration.
        mdp: True MDP; if given its optimal values are included as ``"optimal"``.
        algorithms: Algorithm names to run.
        radii: Optional radii overriding the confidence radii.

    Returns:
        ValueComparison: The value tables.
    """
    values = {}
    for name in algorithms:
        values[name] = ALGORITHMS[name](state.copy(), cfg, radii).values
    initial_state = 0
    if mdp is not None:
        values["optimal"] = rs_ddp_scalar(mdp, cfg.beta).v_star
        initial_state = mdp.initial_state
    return ValueComparison(cfg.beta, values, initial_state)


def check_value_chain(comparison: ValueComparison, tol: float = 1e-9) -> Dict[str, bool]:
    """Check the pointwise value ordering between learners.

    Every link ``"a >= b"`` holds if ``values[a] >= values[b] - tol`` at every step and state.
    Links involving algorithms absent from ``comparison`` are skipped. The links between the
    two-atom learners and RSVI2 are only checked for ``beta > 0``.

    Returns:
        dict: Map from link label to verdict.
    """
    links = list(VALUE_CHAIN)
    if comparison.beta > 0:
        links += list(REPRESENTATION_CHAIN)

    verdict = {}
    values = comparison.values
    for big, small in links:
        if big in values and small in values:
            verdict[f"{big} >= {small}"] = bool(np.all(values[big] >= values[small] - tol))
    return verdict
