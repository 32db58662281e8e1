"""Exception types shared across the package.

Three failure modes are kept apart so callers (in particular the CLI) can
map them to distinct exit codes: arguments outside a function's domain,
malformed user input, and requests that exceed a materialization cap.
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ValidationError(ValueError):
    """User-supplied data (degree sequences, CLI tokens) is malformed."""


class CapacityError(RuntimeError):
    """The request would materialize more state than the configured cap."""
