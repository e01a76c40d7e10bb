"""Exceptions shared across the toolkit."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An algorithm was called on input outside its guarantee.

    ``reason`` is a short machine-readable sentence; ``witness`` carries the
    offending vertices when there are any (a pattern copy, a digon).
    """

    def __init__(self, reason: str, *, witness: tuple[int, ...] | None = None, slack=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness
        self.slack = slack


class IterationCapError(RuntimeError):
    """A bounded improvement loop ran past its move budget."""


class SizeCapError(ValueError):
    """Exhaustive search refused an instance above its vertex cap."""
