"""Exception types shared across the package."""

from __future__ import annotations


class QuordError(Exception):
    """Base class for all library errors."""


class InputError(QuordError):
    """Malformed caller input: bad coordinates, mismatched ground sets, unparsable files."""


class ValidationError(InputError):
    """A checking constructor rejected its input.

    `axiom` names the first violated requirement in documented check order;
    `witness` is a tuple of element ids demonstrating the violation.
    """

    def __init__(self, axiom: str, witness: tuple | None = None, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"violates {axiom}"
        if witness is not None:
            msg += f" at {witness}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PreconditionError(InputError):
    """An operation's stated precondition failed; carries a witness when one exists."""

    def __init__(self, message: str, witness: tuple | None = None):
        self.witness = witness
        if witness is not None:
            message += f" (witness {witness})"
        super().__init__(message)


class ResourceCapError(QuordError):
    """The requested computation exceeds a configured size cap."""
