"""Contains the error hierarchy for the package.

Every error carries an optional witness: the concrete indices that make a
check fail. The CLI renders it as a single machine-parsable line.
"""

from __future__ import annotations

import re
from typing import Any


class BinactError(ValueError):
    """Base class for all errors raised by the package.

    Attributes
    ----------
    witness: tuple or None
        Indices demonstrating the failure, if the failing check produces one.
    """

    def __init__(self, msg: str = "", witness: tuple | None = None) -> None:
        super().__init__(msg)
        self.witness = witness

    @classmethod
    def kind(cls) -> str:
        """Kebab-case name of the error, used in witness lines."""
        return re.sub(r"(?<!^)(?=[A-Z])", "-", cls.__name__).lower()

    def witness_line(self) -> str:
        return witness_line(self.kind(), self.witness)


def witness_line(kind: str, witness: Any) -> str:
    if witness is None:
        body = "()"
    elif isinstance(witness, tuple):
        body = "(" + ", ".join(str(w) for w in witness) + ")"
    else:
        body = f"({witness})"
    return f"WITNESS kind={kind} tuple={body}"


# core_group


class NotClosed(BinactError):
    pass


class NotAssociative(BinactError):
    pass


class NoIdentity(BinactError):
    pass


class NoInverse(BinactError):
    pass


class NotASubgroup(BinactError):
    pass


# binary_action


class IdentityAxiomFailed(BinactError):
    pass


class CompositionAxiomFailed(BinactError):
    pass


class NotInvertible(BinactError):
    pass


class IndexOutOfRange(BinactError, IndexError):
    pass


class NotAnOrdinaryAction(BinactError):
    pass


class MemberNotAnAction(BinactError):
    pass


class CarrierMismatch(BinactError):
    pass


# orbits and sections


class EmptyInput(BinactError):
    pass


class NotDistributive(BinactError):
    pass


class OverlappingOrbits(BinactError):
    pass


class NotATransversal(BinactError):
    pass


# extension


class GroupMismatch(BinactError):
    pass


class Sm1Violation(BinactError):
    pass


class Conflict(BinactError):
    """Raised when label propagation assigns two images to one point.

    Attributes
    ----------
    point: int
        The point of the source carrier that received two labels.

    labels: tuple of int
        The existing label and the competing one.

    derivations: tuple of two tuples
        For each label, the steps (g, x, x', result) producing it, every step
        after the steps its arguments depend on. Points of the original domain
        need no step.
    """

    def __init__(
        self,
        msg: str,
        point: int,
        labels: tuple[int, int],
        derivations: tuple[tuple, tuple],
    ) -> None:
        super().__init__(msg, witness=(point, *labels))
        self.point = point
        self.labels = labels
        self.derivations = derivations


class BudgetExceeded(BinactError):
    pass


class StarConditionFailed(BinactError):
    pass


class NoRepresentation(BinactError):
    pass


# search


class TrialsExhausted(BinactError):
    pass


# serialization


class ParseError(BinactError):
    pass
