"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TypeDefectError(Exception):
    """Base class for all errors raised by :mod:`typedefect`."""


class DomainError(TypeDefectError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class RangeError(TypeDefectError, ValueError):
    """A numeric parameter lies outside its documented range."""


class VertexRangeError(RangeError, IndexError):
    """A vertex or face references an index outside the ground set."""


class CapacityError(TypeDefectError, RuntimeError):
    """An exhaustive search would exceed its documented size bound."""


class PreconditionError(TypeDefectError, ValueError):
    """A hypothesis required by a result does not hold for the given inputs.

    ``hypothesis`` names the failed condition so callers can report it.
    """

    def __init__(self, hypothesis: str, message: str | None = None) -> None:
        self.hypothesis = hypothesis
        super().__init__(message or f"precondition failed: {hypothesis}")
