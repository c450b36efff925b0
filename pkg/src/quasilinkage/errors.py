"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class QuasilinkageError(Exception):
    """Base class for domain errors."""


class Violation(QuasilinkageError, ValueError):
    """A named axiom or precondition failure carrying witness data.

    ``kind`` is a short tag such as ``"MissingSingleton"`` or
    ``"NotMaximalShort"``; ``witness`` holds subsets as lists of 1-based
    elements (or plain integers) so that it serializes directly.
    """

    def __init__(self, kind: str, witness: list[Any], message: str = ""):
        self.kind = kind
        self.witness = witness
        super().__init__(message or f"{kind}: {witness}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness}


class BudgetExceeded(QuasilinkageError):
    """Raised when an enumeration exceeds its node or cell budget."""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial
