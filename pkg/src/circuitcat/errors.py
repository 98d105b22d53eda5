"""Exception types shared across the package.

Each class name doubles as the stable textual code reported by the CLI,
so renaming one is a breaking change.
"""

from __future__ import annotations


class CircuitCatError(Exception):
    """Base class for all validation and range errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class TooShort(CircuitCatError):
    """Circuit has fewer than three entries."""


class LengthMismatch(CircuitCatError):
    """Entry and marking vectors have different lengths."""


class ZeroEntry(CircuitCatError):
    """A circuit entry is zero."""


class UnbalancedA(CircuitCatError):
    """Circuit entries do not sum to zero."""


class UnbalancedNu(CircuitCatError):
    """Marking vector does not sum to zero."""


class Overflow(CircuitCatError):
    """Value outside the supported integer range."""


class NeedTwoPositives(CircuitCatError):
    """Operation requires at least two positive entries."""


class OutOfRange(CircuitCatError):
    """Object index or size outside the valid range."""


class VolumeBound(CircuitCatError):
    """Object count must stay strictly below the circuit volume."""


class BadOrder(CircuitCatError):
    """Path indices supplied in the wrong order."""


class OutOfBounds(CircuitCatError):
    """Spectral index outside its admissible interval."""


class BranchMismatch(CircuitCatError):
    """One-dimensional morphisms on different branches cannot compose."""


class WrongHom(CircuitCatError):
    """Element does not belong to the expected morphism space."""


class BadPosition(CircuitCatError):
    """Mutation position outside 1..n-1."""


class NeedBaseCase(CircuitCatError):
    """Circuit does not have the shape required by the base model."""


class ExteriorOverflow(CircuitCatError):
    """An odd generator appears with exponent greater than one."""
