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

"""Tests for instances.py."""

import numpy as np
from ddt import ddt, data, unpack

from rsdp.exceptions import InvalidParameterError
from rsdp.mdp import HardInstanceSpec, make_hard_mdp, make_risky_mdp
from rsdp.planning import brute_force_optimal, rs_ddp_scalar

from ..common import RSDPTestCase, slow_test


class TestRiskyMDP(RSDPTestCase):
    """Tests for make_risky_mdp."""

    def setUp(self):
        self.mdp = make_risky_mdp()

    def test_shape(self):
        """Five non-initial states plus state 0, five actions, horizon five."""
        self.assertEqual(self.mdp.shape, (5, 6, 5))
        self.assertEqual(self.mdp.initial_state, 0)

    def test_risky_rows(self):
        """Risky actions put mass 0.5 on state 1 and spread the rest over 2..S-1."""
        row = self.mdp.transitions[1, 3, 0]
        self.assertAlmostEqual(row.sum(), 1.0, places=12)
        self.assertAllClose(row, [0.0, 0.5, 0.5 / 3, 0.5 / 3, 0.5 / 3, 0.0])
        for a in range(4):
            self.assertAllClose(self.mdp.transitions[:, :, a], self.mdp.transitions[:, :, 0])

    def test_safe_row(self):
        """The last action reaches state S with probability 0.999."""
        row = self.mdp.transitions[2, 1, 4]
        self.assertAllClose(row, [0.0, 0.00025, 0.00025, 0.00025, 0.00025, 0.999])

    def test_rewards(self):
        """State 1 pays 1, state S pays 0.4, all others 0."""
        r = self.mdp.rewards
        self.assertTrue(np.all(r[:, 1, :] == 1.0))
        self.assertTrue(np.all(r[:, 5, :] == 0.4))
        self.assertTrue(np.all(r[:, [0, 2, 3, 4], :] == 0.0))

    def test_first_step(self):
        """Rows out of state 0 match the rows of later steps."""
        self.assertAllClose(self.mdp.transitions[0, 0], self.mdp.transitions[3, 2])

    def test_sizes(self):
        """Other sizes and their lower limits."""
        self.assertEqual(make_risky_mdp(4, 3, 2).shape, (2, 5, 3))
        with self.assertRaises(InvalidParameterError):
            make_risky_mdp(2, 5, 5)


@ddt
class TestHardMDP(RSDPTestCase):
    """Tests for HardInstanceSpec and make_hard_mdp."""

    @data((2, 1, 3), (2, 2, 9), (3, 2, 6), (2, 3, 12))
    @unpack
    def test_state_count(self, A, d, H):
        """A full tree plus waiting, good and bad states."""
        spec = HardInstanceSpec(A, d, H)
        mdp = make_hard_mdp(spec)
        self.assertEqual(mdp.num_states, 3 + (A**d - 1) // (A - 1))
        self.assertEqual(mdp.initial_state, spec.waiting_state)
        self.assertEqual(spec.waiting_horizon, H // 3)

    def test_reference_instance(self):
        """With epsilon = 0 all leaf rows are identical."""
        spec = HardInstanceSpec(2, 3, 12, epsilon=0.0)
        P = make_hard_mdp(spec).transitions
        leaves = P[:, spec.first_leaf : spec.num_tree_nodes]
        self.assertTrue(np.all(leaves == leaves[0, 0, 0]))

    def test_absorbing(self):
        """Good and bad states loop on themselves."""
        spec = HardInstanceSpec(3, 2, 9, epsilon=0.1)
        P = make_hard_mdp(spec).transitions
        self.assertTrue(np.all(P[:, spec.good_state, :, spec.good_state] == 1.0))
        self.assertTrue(np.all(P[:, spec.bad_state, :, spec.bad_state] == 1.0))

    def test_one_triple_differs(self):
        """The instance differs from the reference in a single transition row, by epsilon."""
        spec = HardInstanceSpec(2, 2, 9, h_star=3, leaf_star=1, action_star=1, epsilon=0.2)
        ref = HardInstanceSpec(2, 2, 9, h_star=3, leaf_star=1, action_star=1, epsilon=0.0)
        diff = make_hard_mdp(spec).transitions - make_hard_mdp(ref).transitions
        idx = np.argwhere(diff != 0)
        leaf = spec.first_leaf + 1
        self.assertEqual(
            sorted(map(tuple, idx)), [(2, leaf, 1, spec.good_state), (2, leaf, 1, spec.bad_state)]
        )
        self.assertAlmostEqual(diff[2, leaf, 1, spec.good_state], 0.2)
        self.assertAlmostEqual(diff[2, leaf, 1, spec.bad_state], -0.2)

    def test_tree_is_deterministic(self):
        """Action a at node i leads to node A i + 1 + a."""
        spec = HardInstanceSpec(3, 3, 9)
        P = make_hard_mdp(spec).transitions
        self.assertEqual(P[4, 1, 2, 6], 1.0)
        self.assertEqual(P[0, 0, 0, 1], 1.0)

    def test_waiting_state(self):
        """Action 0 waits up to the waiting horizon, every other choice enters the tree."""
        spec = HardInstanceSpec(2, 2, 9)
        P = make_hard_mdp(spec).transitions
        s_w = spec.waiting_state
        self.assertTrue(np.all(P[:3, s_w, 0, s_w] == 1.0))
        self.assertTrue(np.all(P[3:, s_w, 0, 0] == 1.0))
        self.assertTrue(np.all(P[:, s_w, 1, 0] == 1.0))

    def test_rewards(self):
        """Reward 1 only in the good state from the first rewarding step."""
        spec = HardInstanceSpec(2, 2, 9)
        r = make_hard_mdp(spec).rewards
        self.assertEqual(spec.reward_start, 6)
        self.assertEqual(r.sum(), 2 * spec.reward_steps)
        self.assertTrue(np.all(r[5:, spec.good_state] == 1.0))

    @data(-2.0, -0.5, 0.5, 1.0, 3.0)
    def test_closed_form_optimal_value(self, beta):
        """The optimal EntRM value matches the closed form."""
        spec = HardInstanceSpec(2, 2, 9, h_star=4, leaf_star=1, epsilon=0.15, beta=beta)
        plan = rs_ddp_scalar(make_hard_mdp(spec), beta)
        self.assertAlmostEqual(plan.value(spec.waiting_state), spec.optimal_value(), places=9)

    @slow_test
    def test_closed_form_random_specs(self):
        """Twenty random legal instances match the closed form within 1e-9."""
        rng = np.random.default_rng(11)
        for _ in range(20):
            A, d = int(rng.integers(2, 4)), int(rng.integers(1, 3))
            H = int(rng.integers(3 * d, 3 * d + 4))
            p = float(rng.uniform(0.0, 0.9))
            beta = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 3.0))
            base = HardInstanceSpec(A, d, H)
            spec = HardInstanceSpec(
                A,
                d,
                H,
                h_star=int(rng.integers(d + 1, base.waiting_horizon + d + 1)),
                leaf_star=int(rng.integers(base.num_leaves)),
                action_star=int(rng.integers(A)),
                p=p,
                epsilon=float(rng.uniform(0.0, 1.0 - p)),
                beta=beta,
            )
            with self.subTest(spec=spec):
                plan = rs_ddp_scalar(make_hard_mdp(spec), beta)
                self.assertLessEqual(
                    abs(plan.value(spec.waiting_state) - spec.optimal_value()), 1e-9
                )

    def test_closed_form_risk_neutral(self):
        """beta = 0 gives the expected number of rewarding steps."""
        spec = HardInstanceSpec(2, 2, 9, epsilon=0.15)
        self.assertAlmostEqual(spec.optimal_value(0.0), 4 * 0.4)

    def test_smallest_instance_enumeration(self):
        """Exhaustive search on the smallest instance enters the leaf and plays a*."""
        spec = HardInstanceSpec(2, 1, 3, action_star=1, p=0.3, epsilon=0.2, beta=-1.0)
        mdp = make_hard_mdp(spec)
        plan = brute_force_optimal(mdp, spec.beta)
        self.assertEqual(plan.policy(1, spec.waiting_state), 1)
        self.assertEqual(plan.policy(spec.h_star, spec.first_leaf), spec.action_star)
        self.assertAlmostEqual(plan.value(spec.waiting_state), spec.optimal_value(), places=10)

    def test_lower_bound_constants(self):
        """p = exp(-beta H') / 4 and p + epsilon <= 1."""
        spec = HardInstanceSpec.lower_bound_instance(2, 2, 9, num_episodes=1000, beta=0.5)
        self.assertAlmostEqual(spec.p, 0.25 * np.exp(-0.5 * spec.reward_steps))
        self.assertGreater(spec.epsilon, 0.0)
        self.assertLessEqual(spec.p + spec.epsilon, 1.0)

    @data(
        {"branching": 1, "depth": 1, "horizon": 3},
        {"branching": 2, "depth": 2, "horizon": 5},
        {"branching": 2, "depth": 1, "horizon": 3, "h_star": 3},
        {"branching": 2, "depth": 2, "horizon": 9, "leaf_star": 2},
        {"branching": 2, "depth": 2, "horizon": 9, "p": 0.9, "epsilon": 0.2},
        {"branching": 2, "depth": 2, "horizon": 9, "waiting_horizon": 6},
    )
    def test_invalid_spec(self, kwargs):
        """Specs outside the admissible range are rejected."""
        with self.assertRaises(InvalidParameterError):
            HardInstanceSpec(**kwargs)
