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

"""Tests for tabular_mdp.py."""

import json
import os
import tempfile

import numpy as np

from rsdp.exceptions import RSDPError, ValidationError
from rsdp.mdp import (
    Policy,
    TabularMDP,
    load_mdp,
    make_risky_mdp,
    mdp_from_dict,
    mdp_to_dict,
    save_mdp,
)

from ..common import RSDPTestCase, random_mdp


class TestTabularMDP(RSDPTestCase):
    """Validation of TabularMDP."""

    def setUp(self):
        P = np.zeros((2, 2, 2, 2))
        P[..., 0] = 1.0
        self.P = P
        self.r = np.full((2, 2, 2), 0.5)

    def test_shape(self):
        """Sizes are read from the arrays."""
        mdp = TabularMDP(self.P, self.r, initial_state=1)
        self.assertEqual(mdp.shape, (2, 2, 2))
        self.assertEqual(mdp.horizon, 2)
        self.assertEqual(mdp.num_states, 2)
        self.assertEqual(mdp.num_actions, 2)
        self.assertEqual(mdp.initial_state, 1)

    def test_row_off_simplex(self):
        """A row summing to 0.9 is rejected."""
        P = self.P.copy()
        P[1, 0, 1, 0] = 0.9
        with self.assertRaisesRegex(ValidationError, "h=2, s=0, a=1"):
            TabularMDP(P, self.r)

    def test_reward_out_of_range(self):
        """A reward of 1.2 is rejected."""
        r = self.r.copy()
        r[0, 0, 0] = 1.2
        with self.assertRaises(ValidationError):
            TabularMDP(self.P, r)

    def test_shape_mismatch(self):
        """Rewards must match the transition shape."""
        with self.assertRaises(ValidationError):
            TabularMDP(self.P, self.r[:1])
        with self.assertRaises(ValidationError):
            TabularMDP(self.P[..., :1], self.r)

    def test_initial_state(self):
        """The initial state must be a valid index."""
        with self.assertRaises(ValidationError):
            TabularMDP(self.P, self.r, initial_state=2)

    def test_tolerance(self):
        """Rows within the simplex tolerance are accepted."""
        P = self.P.copy()
        P[0, 0, 0, 0] = 1.0 + 1e-11
        TabularMDP(P, self.r)

    def test_immutable(self):
        """Arrays are copied and read-only."""
        mdp = TabularMDP(self.P, self.r)
        self.P[0, 0, 0] = [0.0, 1.0]
        self.assertEqual(mdp.transitions[0, 0, 0, 0], 1.0)
        with self.assertRaises(ValueError):
            mdp.rewards[0, 0, 0] = 0.0


class TestPolicy(RSDPTestCase):
    """Tests for Policy."""

    def test_call_is_one_based(self):
        """The first step is h = 1."""
        pi = Policy([[0, 1], [1, 0]])
        self.assertEqual(pi(1, 1), 1)
        self.assertEqual(pi(2, 1), 0)

    def test_invalid(self):
        """Non-integer, negative or out-of-range actions are rejected."""
        with self.assertRaises(ValidationError):
            Policy([[0.5, 1]])
        with self.assertRaises(ValidationError):
            Policy([[-1, 0]])
        with self.assertRaises(ValidationError):
            Policy([[2, 0]], num_actions=2)
        with self.assertRaises(ValidationError):
            Policy([0, 1])

    def test_compatibility(self):
        """Shape and action range are checked against an MDP."""
        mdp = make_risky_mdp()
        Policy.constant(4, 5, 6).check_compatible(mdp)
        with self.assertRaises(ValidationError):
            Policy.constant(5, 5, 6).check_compatible(mdp)
        with self.assertRaises(ValidationError):
            Policy.constant(0, 4, 6).check_compatible(mdp)

    def test_from_array(self):
        """An action table becomes a policy, checked against the MDP when one is given."""
        mdp = make_risky_mdp()
        table = np.tile(np.arange(6) % 5, (5, 1))
        pi = Policy.from_array(table, mdp)
        self.assertEqual(pi(3, 4), 4)
        np.testing.assert_array_equal(pi.actions, table)
        self.assertEqual(Policy.from_array([[0, 7]])(1, 1), 7)
        with self.assertRaises(ValidationError):
            Policy.from_array(np.full((5, 6), 5), mdp)
        with self.assertRaises(ValidationError):
            Policy.from_array(np.zeros((4, 6), dtype=int), mdp)


class TestSerialization(RSDPTestCase):
    """JSON storage of MDPs."""

    def test_round_trip(self):
        """Save then load gives an equal MDP."""
        mdp = random_mdp(np.random.default_rng(3), 3, 2, 4)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "mdp.json")
            save_mdp(mdp, path)
            self.assertEqual(load_mdp(path), mdp)

    def test_schema(self):
        """Keys of the JSON object."""
        data = mdp_to_dict(make_risky_mdp())
        self.assertEqual(set(data), {"S", "A", "H", "initial_state", "P", "r"})
        self.assertEqual((data["S"], data["A"], data["H"]), (6, 5, 5))

    def test_missing_key(self):
        """Missing keys are a validation error."""
        data = mdp_to_dict(make_risky_mdp())
        del data["r"]
        with self.assertRaisesRegex(ValidationError, "missing"):
            mdp_from_dict(data)

    def test_declared_sizes(self):
        """Declared sizes must agree with the arrays."""
        data = mdp_to_dict(make_risky_mdp())
        data["S"] = 5
        with self.assertRaises(ValidationError):
            mdp_from_dict(data)

    def test_non_integer_sizes(self):
        """Sizes that are not integers are a validation error."""
        for value in ("three", None, [6]):
            data = mdp_to_dict(make_risky_mdp())
            data["S"] = value
            with self.assertRaisesRegex(ValidationError, "integers"):
                mdp_from_dict(data)

    def test_off_simplex_file(self):
        """A row summing to 0.9 in a file is rejected."""
        data = mdp_to_dict(make_risky_mdp())
        data["P"][0][0][0][1] -= 0.1
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "mdp.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f)
            with self.assertRaises(ValidationError):
                load_mdp(path)

    def test_malformed_file(self):
        """Invalid JSON and missing files raise package errors."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "mdp.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write("{not json")
            with self.assertRaises(ValidationError):
                load_mdp(path)
            with open(path, "wb") as f:
                f.write(b"\xff\xfe{}")
            with self.assertRaisesRegex(ValidationError, "UTF-8"):
                load_mdp(path)
            with self.assertRaises(RSDPError):
                load_mdp(os.path.join(tmp, "missing.json"))
