"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input (bad dimension, zero vector, ...).

    Carries a short machine-readable ``code`` so CLI reports stay parseable.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class DimensionMismatch(InputError):
    def __init__(self, message: str):
        super().__init__("dimension_mismatch", message)


class InternalCheckError(RuntimeError):
    """A consistency assertion failed.

    Raised when a computation contradicts a property that is guaranteed to
    hold for correct inputs (e.g. unequal scaling ratios after every extreme
    point passed the preservation check).  Surfaced loudly, never repaired.
    """
