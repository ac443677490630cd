"""Exception hierarchy shared by the evaluation kernels and the checkers."""

from __future__ import annotations


class EvalError(ValueError):
    """Base class for evaluation failures.

    ``kind`` is one of ``PoleOrNonpositive``, ``OutOfDomain``, ``Overflow`` or
    ``NotConverged`` and always appears at the start of the message, so that
    command-line users see which precondition was violated.
    """

    kind = "EvalError"

    def __init__(self, message: str = ""):
        super().__init__(f"{self.kind}: {message}" if message else self.kind)


class PoleOrNonpositive(EvalError):
    kind = "PoleOrNonpositive"


class OutOfDomain(EvalError):
    kind = "OutOfDomain"


class Overflow(EvalError):
    kind = "Overflow"


class NotConverged(EvalError):
    kind = "NotConverged"


class UnknownCase(KeyError):
    """Raised for a case id that is not in the catalog."""

    def __str__(self) -> str:
        return f"UnknownCase: {self.args[0]!r}"
