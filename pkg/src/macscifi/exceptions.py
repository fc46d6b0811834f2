"""Custom exception classes for the macscifi algebra and verification library.

This module defines specific exception types so that callers can tell apart
arithmetic failures, malformed shapes, expansions that are not what they claim
to be, and resource caps. Using specific exceptions instead of bare Exception
makes it easier to:
- Catch and handle specific error conditions
- Surface clear messages from the CLI without tracebacks
- Attach witnesses (points, compositions, partitions) to failures
"""

from __future__ import annotations

from typing import Any


class MacsciFiError(Exception):
    """Base exception class for all macscifi errors."""

    pass


class AlgebraError(MacsciFiError):
    """Base exception class for exact-arithmetic errors."""

    pass


class ZeroDenominatorError(AlgebraError):
    """Raised when a rational function is built with, or divided by, zero."""

    pass


class PoleAtPointError(AlgebraError):
    """Raised when evaluation hits a zero of the reduced denominator."""

    def __init__(self, message: str, point: dict[str, Any] | None = None, index: Any = None):
        super().__init__(message)
        self.point = point or {}
        self.index = index


class SingularMatrixError(AlgebraError):
    """Raised when elimination finds no pivot in some column."""

    pass


class ParseError(AlgebraError):
    """Raised when a textual rational function cannot be parsed."""

    pass


class ShapeError(MacsciFiError):
    """Base exception class for partitions, cells, paths and diagrams."""

    pass


class CellNotInShapeError(ShapeError):
    """Raised when a cell lies outside the shape it is measured against."""

    pass


class NotRemovableError(ShapeError):
    """Raised when removing a cell that is not a removable corner."""

    pass


class NotADyckPathError(ShapeError):
    """Raised when an N/E word is not a Dyck path."""

    pass


class SizeMismatchError(ShapeError):
    """Raised when two objects that must have equal size do not."""

    pass


class IndexOutOfRangeError(ShapeError):
    """Raised when a row, column or corner index is out of range."""

    pass


class NotCoveredByCommonShapeError(ShapeError):
    """Raised when partitions are not all one-cell removals of a common partition."""

    def __init__(self, message: str, partitions: tuple[Any, ...] = ()):
        super().__init__(message)
        self.partitions = partitions


class DuplicatePartitionError(ShapeError):
    """Raised when an intersection is requested over repeated partitions."""

    pass


class ExpansionError(MacsciFiError):
    """Base exception class for symmetric and quasisymmetric expansions."""

    pass


class NotSymmetricError(ExpansionError):
    """Raised when a quasisymmetric expansion fails the symmetry check."""

    def __init__(self, message: str, witness: tuple[Any, Any] | None = None):
        super().__init__(message)
        self.witness = witness


class DegreeMismatchError(ExpansionError):
    """Raised when combining expansions of different degrees."""

    pass


class FillingError(MacsciFiError):
    """Base exception class for filled diagrams."""

    pass


class NotInVError(FillingError):
    """Raised when two columns fail the local column-exchange condition."""

    pass


class CapError(MacsciFiError):
    """Base exception class for configured size caps."""

    pass


class SizeCapExceededError(CapError):
    """Raised when an enumeration would exceed its configured size cap."""

    pass
