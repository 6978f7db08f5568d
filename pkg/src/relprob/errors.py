"""Exception hierarchy shared by every relprob module."""

from __future__ import annotations


class RpfError(ValueError):
    """Base class for domain errors raised by relprob."""


class AxiomViolationError(RpfError):
    """An input table breaks identity, inverse or composition.

    ``violations`` holds the offending :class:`~relprob.rpf.Violation` records.
    """

    def __init__(self, violations, message: str | None = None):
        self.violations = list(violations)
        if message is None:
            first = self.violations[0] if self.violations else None
            message = f"{len(self.violations)} axiom violation(s)"
            if first is not None:
                message += f"; first: {first}"
        super().__init__(message)


class IncomparableError(RpfError):
    """A wildcard entry reached an operation that needs a comparable value."""


class NotAnchoredError(RpfError):
    pass


class NotConvergedError(RpfError):
    """A sequence of RPFs did not settle, or settled onto an invalid table."""

    def __init__(self, message: str, entry: tuple[int, int] | None = None):
        self.entry = entry
        super().__init__(message)


class DocumentError(RpfError):
    """Malformed document text (bad JSON, unknown format tag, bad value)."""
