"""Exception types shared by every module."""

from __future__ import annotations


class InvalidInput(ValueError):
    """An argument violates the invariants of the set it claims to belong to."""


class NotInImage(InvalidInput):
    """A left inverse was given a value outside the image of its forward map."""


class ExceptionalElement(InvalidInput):
    """No weight-increasing injection is defined for this tuple."""


class CapExceeded(RuntimeError):
    """An enumeration would produce more elements than the configured cap."""


class InternalError(AssertionError):
    """A property that holds for every valid input failed; this is a bug."""
