"""Exception types shared across the package."""

from __future__ import annotations


class CarrierMismatch(ValueError):
    """Raised when elements of two different carriers are combined."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class AxiomFailure(PreconditionError):
    """An input structure fails axioms that an operation requires.

    The failing reports are kept on ``reports`` so callers can show the
    counterexamples.
    """

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = list(reports)


class InputError(ValueError):
    """Malformed structured-text input (line and column when known)."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
