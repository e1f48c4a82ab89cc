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
Errors raised by rsdp.

Every error derives from :class:`RSDPError`, itself a :class:`qiskit.QiskitError`.
"""

from qiskit import QiskitError


class RSDPError(QiskitError):
    """Base class for errors raised by rsdp."""


class InvalidParameterError(RSDPError):
    """An argument is outside the domain where the operation is defined."""


class ValidationError(InvalidParameterError):
    """A model, policy or file failed structural validation."""


class NumericRangeError(RSDPError):
    """A computation produced a non-finite value."""


class CapacityError(RSDPError):
    """A size guard was exceeded (distribution support cap, policy enumeration limit)."""
