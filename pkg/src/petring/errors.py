"""Exceptions shared across the package."""

__all__ = ["ConsistencyError", "PresentationError"]


class ConsistencyError(RuntimeError):
    """A mathematical invariant failed (non-integer or negative structure
    constant, or two engines disagreeing).  Always a bug or bad input, never
    a recoverable condition."""


class PresentationError(RuntimeError):
    """The quadratic relations did not eliminate every non-square-free
    monomial at some degree, so normal forms are not defined there."""
