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
General infrastructure for unit tests.

``RSDPTestCase`` adds array assertions used across tests. The ``random_*`` helpers build
reproducible random instances from a ``numpy`` generator. Tests that take minutes are wrapped with
``slow_test`` and only run when the environment variable ``RSDP_RUN_SLOW`` is set to ``1``.
"""

import os
import unittest
from functools import wraps

import numpy as np

from rsdp.distributions import DiscreteDistribution
from rsdp.mdp import TabularMDP


class RSDPTestCase(unittest.TestCase):
    """Helper class that contains common functionality."""

    def assertAllClose(self, A, B, rtol=1e-8, atol=1e-8):
        """Call np.allclose and assert true."""
        A = np.asarray(A, dtype=float)
        B = np.asarray(B, dtype=float)
        self.assertTrue(np.allclose(A, B, rtol=rtol, atol=atol), msg=f"\n{A}\n!=\n{B}")

    def assertAllLessEqual(self, A, B, tol=1e-9):
        """Assert ``A <= B + tol`` elementwise."""
        A = np.asarray(A, dtype=float)
        B = np.asarray(B, dtype=float)
        worst = float(np.max(A - B))
        self.assertLessEqual(worst, tol, msg=f"largest violation {worst}")


def slow_test(test_fn):
    """Skip ``test_fn`` unless ``RSDP_RUN_SLOW=1``."""

    @wraps(test_fn)
    def wrapper(*args, **kwargs):
        if os.environ.get("RSDP_RUN_SLOW") != "1":
            raise unittest.SkipTest("Skipping slow test; set RSDP_RUN_SLOW=1 to run it.")
        return test_fn(*args, **kwargs)

    return wrapper


def random_probs(rng: np.random.Generator, n: int, sparsity: float = 0.0) -> np.ndarray:
    """Random probability vector of length ``n``; entries are zeroed with prob ``sparsity``."""
    p = rng.random(n) + 1e-3
    p[rng.random(n) < sparsity] = 0.0
    if p.sum() == 0.0:
        p[rng.integers(n)] = 1.0
    return p / p.sum()


def random_distribution(
    rng: np.random.Generator, n: int = 5, lo: float = 0.0, hi: float = 1.0
) -> DiscreteDistribution:
    """Random distribution with ``n`` atoms in ``[lo, hi]``."""
    atoms = lo + (hi - lo) * rng.random(n)
    return DiscreteDistribution(atoms, random_probs(rng, n))


def random_mdp(
    rng: np.random.Generator, S: int, A: int, H: int, sparsity: float = 0.3
) -> TabularMDP:
    """Random MDP with rewards in ``[0, 1]`` and partially sparse transition rows."""
    P = np.empty((H, S, A, S))
    for idx in np.ndindex(H, S, A):
        P[idx] = random_probs(rng, S, sparsity)
    r = rng.random((H, S, A))
    return TabularMDP(P, r, initial_state=int(rng.integers(S)))
