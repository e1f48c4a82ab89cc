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
Finite discrete distributions over the real line.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from rsdp.exceptions import InvalidParameterError

# probabilities must sum to one within this tolerance
PROB_TOL = 1e-9

# atoms closer than this are merged into one
ATOM_TOL = 1e-12


@dataclass(frozen=True)
class RiskParam:
    """Risk parameter :math:`\\beta` of the entropic risk measure.

    Negative values are risk-averse, positive values risk-seeking, and ``beta == 0`` stands for
    the risk-neutral limit.
    """

    beta: float

    def __post_init__(self):
        beta = float(self.beta)
        if not np.isfinite(beta):
            raise InvalidParameterError(f"beta must be a finite real number, got {self.beta}.")
        object.__setattr__(self, "beta", beta)

    @property
    def sign(self) -> float:
        """Sign of beta (0.0 in the risk-neutral case)."""
        return float(np.sign(self.beta))

    @property
    def is_neutral(self) -> bool:
        """Whether beta is exactly zero."""
        return self.beta == 0.0


BetaLike = Union[RiskParam, float, int]


def as_beta(rp: BetaLike) -> float:
    """Return the raw float beta of a :class:`RiskParam` or a number."""
    if isinstance(rp, RiskParam):
        return rp.beta
    return RiskParam(rp).beta


@dataclass(frozen=True)
class BernoulliSupport:
    """Two-atom support :math:`(\\theta_1, \\theta_2)` with :math:`\\theta_1 < \\theta_2`."""

    theta1: float
    theta2: float

    def __post_init__(self):
        if not (np.isfinite(self.theta1) and np.isfinite(self.theta2)):
            raise InvalidParameterError("Bernoulli support atoms must be finite.")
        if not self.theta1 < self.theta2:
            raise InvalidParameterError(
                f"Bernoulli support needs theta1 < theta2, got ({self.theta1}, {self.theta2})."
            )

    @property
    def width(self) -> float:
        """Distance between the two atoms."""
        return self.theta2 - self.theta1


class DiscreteDistribution:
    r"""A finitely supported distribution :math:`\sum_i p_i \delta_{x_i}`.

    On construction the atoms are sorted, atoms within ``ATOM_TOL`` of each other are merged
    (probabilities summed) and zero-probability atoms are dropped, so that the stored atoms are
    strictly increasing and every stored probability is positive. Instances are immutable.
    """

    __slots__ = ("_atoms", "_probs")

    def __init__(self, atoms, probs):
        """Build a distribution from atoms and probabilities.

        Args:
            atoms: Support points, in any order and possibly repeated.
            probs: Probabilities of the atoms, same length as ``atoms``.

        Raises:
            InvalidParameterError: If the inputs are not finite, have mismatched lengths, contain
                negative probabilities, or do not sum to one within ``PROB_TOL``.
        """
        atoms = np.asarray(atoms, dtype=float).reshape(-1)
        probs = np.asarray(probs, dtype=float).reshape(-1)

        if atoms.shape != probs.shape:
            raise InvalidParameterError(
                f"atoms and probs must have the same length, got {len(atoms)} and {len(probs)}."
            )
        if len(atoms) == 0:
            raise InvalidParameterError("A distribution needs at least one atom.")
        if not (np.all(np.isfinite(atoms)) and np.all(np.isfinite(probs))):
            raise InvalidParameterError("Atoms and probabilities must be finite.")
        if np.any(probs < -PROB_TOL):
            raise InvalidParameterError("Probabilities must be nonnegative.")
        total = probs.sum()
        if abs(total - 1.0) > PROB_TOL:
            raise InvalidParameterError(f"Probabilities must sum to 1, got {total}.")

        self._atoms, self._probs = _canonicalize(atoms, np.clip(probs, 0.0, None))

    @classmethod
    def _from_arrays(cls, atoms: np.ndarray, probs: np.ndarray) -> "DiscreteDistribution":
        """Internal constructor for arrays known to be valid up to ordering and merging."""
        out = cls.__new__(cls)
        out._atoms, out._probs = _canonicalize(atoms, probs)
        return out

    @classmethod
    def dirac(cls, c: float) -> "DiscreteDistribution":
        """Point mass at ``c``."""
        return cls([c], [1.0])

    @classmethod
    def bernoulli(cls, theta1: float, theta2: float, q: float) -> "DiscreteDistribution":
        """Two-atom distribution :math:`(\\theta_1, \\theta_2; q)` with mass ``q`` on ``theta2``."""
        return cls([theta1, theta2], [1.0 - q, q])

    @property
    def atoms(self) -> np.ndarray:
        """Strictly increasing support points (read-only)."""
        return self._atoms

    @property
    def probs(self) -> np.ndarray:
        """Positive probabilities of the atoms (read-only)."""
        return self._probs

    def __len__(self) -> int:
        return len(self._atoms)

    def cdf(self, x) -> Union[float, np.ndarray]:
        """Right-continuous CDF :math:`F(x) = P(X \\le x)`."""
        cum = np.cumsum(self._probs)
        idx = np.searchsorted(self._atoms, x, side="right")
        out = np.where(idx > 0, cum[np.maximum(idx - 1, 0)], 0.0)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def mean(self) -> float:
        """Expected value."""
        return float(np.dot(self._probs, self._atoms))

    def variance(self) -> float:
        """Variance."""
        centred = self._atoms - self.mean()
        return float(np.dot(self._probs, centred * centred))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiscreteDistribution):
            return False
        return np.array_equal(self._atoms, other._atoms) and np.array_equal(
            self._probs, other._probs
        )

    def __hash__(self):
        return hash((self._atoms.tobytes(), self._probs.tobytes()))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x:.6g}: {p:.6g}" for x, p in zip(self._atoms, self._probs))
        return f"DiscreteDistribution({{{pairs}}})"


def _canonicalize(atoms: np.ndarray, probs: np.ndarray):
    """Sort, merge atoms within ``ATOM_TOL`` and drop zero-probability atoms.

    Merged atoms take the position of the smallest atom of their group.
    """
    order = np.argsort(atoms, kind="stable")
    atoms = atoms[order]
    probs = probs[order]

    starts = np.empty(len(atoms), dtype=bool)
    starts[0] = True
    starts[1:] = np.diff(atoms) > ATOM_TOL
    if not starts.all():
        group = np.cumsum(starts) - 1
        probs = np.bincount(group, weights=probs)
        atoms = atoms[starts]

    keep = probs > 0.0
    if not keep.all():
        atoms = atoms[keep]
        probs = probs[keep]

    atoms = np.array(atoms, dtype=float)
    probs = np.array(probs, dtype=float)
    atoms.flags.writeable = False
    probs.flags.writeable = False
    return atoms, probs
