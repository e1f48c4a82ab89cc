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
Random streams and episode simulation.

Every random stream in the package is a :class:`numpy.random.Generator` driven by the
counter-based ``Philox`` bit generator. The stream of one episode is keyed by ``(seed, episode)``
through :class:`numpy.random.SeedSequence`, so streams can be created independently in any order
or process.
"""

import numpy as np

from .tabular_mdp import TabularMDP, Policy, Trajectory, TrajectoryStep


def make_rng(seed: int, *spawn_key: int) -> np.random.Generator:
    """Philox generator for ``seed`` and an optional substream key."""
    key = tuple(int(k) for k in spawn_key)
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=key)
    return np.random.Generator(np.random.Philox(sequence))


def episode_rng(seed: int, episode: int) -> np.random.Generator:
    """Independent stream for episode ``episode`` of the run seeded with ``seed``."""
    return make_rng(seed, episode)


def sample_next_state(row: np.ndarray, rng: np.random.Generator) -> int:
    """Draw an index from the probability vector ``row``."""
    cumulative = np.cumsum(row)
    idx = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
    if idx >= len(row):
        idx = int(np.flatnonzero(row > 0)[-1])
    return idx


def simulate_episode(mdp: TabularMDP, policy: Policy, rng: np.random.Generator) -> Trajectory:
    """Roll out one episode of ``policy`` in ``mdp``.

    Args:
        mdp: The environment.
        policy: Policy of matching shape.
        rng: Random stream; the trajectory is a deterministic function of its state.

    Returns:
        Trajectory: The H transitions.

    Raises:
        ValidationError: If the policy does not fit the MDP.
    """
    policy.check_compatible(mdp)
    P = mdp.transitions
    r = mdp.rewards

    steps = []
    s = mdp.initial_state
    for h in range(mdp.horizon):
        a = int(policy.actions[h, s])
        s_next = sample_next_state(P[h, s, a], rng)
        steps.append(TrajectoryStep(h + 1, s, a, float(r[h, s, a]), s_next))
        s = s_next
    return Trajectory(tuple(steps))
