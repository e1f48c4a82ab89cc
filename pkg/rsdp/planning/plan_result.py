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
Container for planner results.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from rsdp.distributions import DiscreteDistribution
from rsdp.mdp import Policy


@dataclass
class PlanResult:
    """Result of a planning or policy-search pass.

    Attributes:
        policy: Greedy policy.
        v_star: EntRM value table, shape ``(H+1, S)``, last row zero.
        w_star: Exponential-utility table :math:`e^{\\beta V}`, or ``None`` for ``beta == 0`` or
            when it is not representable.
        q_values: EntRM action values, shape ``(H, S, A)``.
        beta: Risk parameter used.
        method: Name of the producing planner.
        eta: Optional action-return distributions ``eta[h][s][a]``.
        nu: Optional state-return distributions ``nu[h][s]``, ``H+1`` rows.
        max_support: Largest support size met while planning (0 for scalar planners).
    """

    policy: Policy
    v_star: np.ndarray
    w_star: Optional[np.ndarray]
    q_values: np.ndarray
    beta: float
    method: str
    eta: Optional[List[List[List[DiscreteDistribution]]]] = field(default=None, repr=False)
    nu: Optional[List[List[DiscreteDistribution]]] = field(default=None, repr=False)
    max_support: int = 0

    @property
    def return_dists(self) -> bool:
        """Whether distribution tables are attached."""
        return self.nu is not None

    def value(self, state: int, h: int = 1) -> float:
        """:math:`V^*_h(s)` for 1-based ``h``."""
        return float(self.v_star[h - 1, state])

    def to_dict(self, initial_state: int) -> dict:
        """JSON-ready summary used by the command line ``plan`` output."""
        return {
            "beta": self.beta,
            "method": self.method,
            "initial_state": int(initial_state),
            "v_star_1": self.value(initial_state),
            "policy": self.policy.tolist(),
        }
