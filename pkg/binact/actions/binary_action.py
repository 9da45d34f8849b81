"""Binary actions of finite groups as validated lookup tables.

A binary action of G on a carrier X = {0, ..., n-1} is a table act[g][x1][x2]
satisfying

    act(gh, x1, x2) = act(g, x1, act(h, x1, x2)),   act(e, x1, x2) = x2.

Fixing x1 gives an ordinary action of G on X, so a binary action is the same
thing as a family of n ordinary actions indexed by the first argument;
family_at and from_family convert between the two views.

Binary operations of X (n x n tables) compose by (f o g)(x, x') = f(x, g(x, x')),
with identity e(x, x') = x'. operation_of maps a group element to the
operation it induces, turning the composition axiom into a homomorphism.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..exceptions import (
    CarrierMismatch,
    CompositionAxiomFailed,
    IdentityAxiomFailed,
    IndexOutOfRange,
    MemberNotAnAction,
    NotAnOrdinaryAction,
    NotInvertible,
)
from ..group import FiniteGroup
from ..utils import as_witness
from ..utils.table_kernels import (
    composition_axiom_witness,
    identity_axiom_witness,
    invertibility_witness,
    ordinary_action_witness,
)


def _as_table(table, shape: tuple[int, ...], what: str) -> np.ndarray:
    raw = np.asarray(table)
    if raw.size and raw.dtype.kind not in "iu":
        raise TypeError(f"Expected integer entries in the {what} but got {raw.dtype}.")
    array = raw.astype(np.int64)

    if array.shape != shape:
        msg = f"Expected the {what} to have shape {shape} but got {array.shape}."
        raise ValueError(msg)

    return array


def _range_witness(array: np.ndarray, n: int) -> tuple[int, ...] | None:
    bad = np.argwhere((array < 0) | (array >= n))
    if bad.size == 0:
        return None
    idx = tuple(int(i) for i in bad[0])
    return (*idx, int(array[idx]))


def _check_range(array: np.ndarray, n: int, what: str) -> None:
    if (witness := _range_witness(array, n)) is not None:
        msg = f"The {what} has entry {witness[-1]} at {witness[:-1]}, outside [0, {n})."
        raise IndexOutOfRange(msg, witness=witness)


class BinaryAction:
    """A binary action of a finite group on a finite carrier.

    Instances are validated on construction and immutable afterwards.

    Attributes
    ----------
    group: FiniteGroup
        The acting group.

    carrier_size: int
        Number of carrier points n.

    act: np.ndarray
        Read-only (m, n, n) table, act[g, x1, x2] = g(x1, x2).
    """

    def __init__(self, group: FiniteGroup, carrier_size: int, act) -> None:
        """
        Arguments
        ----------
        group: The acting group.

        carrier_size: Number of points of the carrier.

        act: Table indexed [g][x1][x2].

        Raises
        ----------
        TypeError: When carrier_size is not an integer.

        ValueError: When the table does not have shape (m, n, n).

        IndexOutOfRange: When an entry is not a carrier point.

        IdentityAxiomFailed: When e(x1, x2) != x2. Witness (x1, x2).

        NotInvertible: When x2 -> g(x1, x2) is not a bijection. Witness (g, x1).

        CompositionAxiomFailed: When gh(x1, x2) != g(x1, h(x1, x2)).
        Witness (g, h, x1, x2).
        """
        if not isinstance(group, FiniteGroup):
            raise TypeError(f"Expected a FiniteGroup but got {type(group)} instead.")

        if isinstance(carrier_size, bool) or not isinstance(carrier_size, (int, np.integer)):
            raise TypeError(f"Expected an integer carrier size but got {carrier_size!r}.")
        n = int(carrier_size)

        if n < 1:
            raise ValueError("The carrier must have at least one point.")

        table = _as_table(act, (group.order, n, n), "action table")
        _check_range(table, n, "action table")

        witness = as_witness(identity_axiom_witness(table, group.identity))
        if witness is not None:
            msg = f"e{witness} = {table[group.identity][witness]} instead of {witness[1]}."
            raise IdentityAxiomFailed(msg, witness=witness)

        witness = as_witness(invertibility_witness(table))
        if witness is not None:
            msg = f"x2 -> {witness[0]}({witness[1]}, x2) is not a bijection."
            raise NotInvertible(msg, witness=witness)

        witness = as_witness(composition_axiom_witness(table, group.cayley))
        if witness is not None:
            g, h, x1, x2 = witness
            msg = f"({g}{h})({x1}, {x2}) != {g}({x1}, {h}({x1}, {x2}))."
            raise CompositionAxiomFailed(msg, witness=witness)

        table.flags.writeable = False

        self._group = group
        self._n = n
        self._act = table

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(order={self._group.order}, carrier_size={self._n})"

    def __repr__(self) -> str:
        return self.__str__()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryAction):
            return NotImplemented
        return self._group == other._group and np.array_equal(self._act, other._act)

    def __hash__(self) -> int:
        return hash(self._act.tobytes())

    @property
    def group(self) -> FiniteGroup:
        return self._group

    @property
    def carrier_size(self) -> int:
        return self._n

    @property
    def act(self) -> np.ndarray:
        return self._act

    def check_point(self, x: int) -> int:
        if not 0 <= x < self._n:
            msg = f"{x} is not a point of a carrier of size {self._n}."
            raise IndexOutOfRange(msg, witness=(x,))
        return int(x)

    def evaluate(self, g: int, x1: int, x2: int) -> int:
        g = self._group.check_element(g)
        return int(self._act[g, self.check_point(x1), self.check_point(x2)])

    def to_table(self) -> list[list[list[int]]]:
        return self._act.tolist()


def action_from_table(G: FiniteGroup, n: int, act) -> BinaryAction:
    return BinaryAction(G, n, act)


def evaluate(a: BinaryAction, g: int, x1: int, x2: int) -> int:
    return a.evaluate(g, x1, x2)


def trivial_action(G: FiniteGroup, n: int) -> BinaryAction:
    """The action g(x1, x2) = x2."""
    act = np.broadcast_to(np.arange(n), (G.order, n, n))
    return BinaryAction(G, n, act)


def ordinary_action_violation(G: FiniteGroup, n: int, rho) -> tuple | None:
    """Returns (g, h, x) breaking the ordinary-action laws of rho, or None.

    A witness with g = h = e means rho(e, x) != x.

    Raises
    ----------
    ValueError: When rho does not have shape (m, n).

    IndexOutOfRange: When an entry is not a carrier point.
    """
    table = _as_table(rho, (G.order, n), "ordinary action table")
    _check_range(table, n, "ordinary action table")
    return as_witness(ordinary_action_witness(table, G.cayley, G.identity))


def from_ordinary_action(G: FiniteGroup, n: int, rho) -> BinaryAction:
    """Embeds the ordinary action rho as the binary action g(x1, x2) = rho(g, x2).

    Raises
    ----------
    NotAnOrdinaryAction: When rho breaks the action laws. Witness (g, h, x).
    """
    if (witness := ordinary_action_violation(G, n, rho)) is not None:
        raise NotAnOrdinaryAction(f"rho fails the action laws at {witness}.", witness=witness)

    rho = np.array(rho, dtype=np.int64)
    return BinaryAction(G, n, np.broadcast_to(rho[:, None, :], (G.order, n, n)))


def family_at(a: BinaryAction, x1: int) -> np.ndarray:
    """Returns the ordinary action g, x2 -> g(x1, x2) as an (m, n) table."""
    x1 = a.check_point(x1)
    rho = a.act[:, x1, :].copy()

    # Holds for every validated action; kept as a consistency check.
    if (witness := ordinary_action_violation(a.group, a.carrier_size, rho)) is not None:
        raise NotAnOrdinaryAction(f"Member {x1} is not an action.", witness=witness)

    return rho


def from_family(G: FiniteGroup, n: int, family: Sequence) -> BinaryAction:
    """Assembles the binary action g(x1, x2) = family[x1](g, x2).

    Raises
    ----------
    ValueError: When the family does not have n members.

    MemberNotAnAction: When a member breaks the action laws.
    Witness (x1, g, h, x).
    """
    if len(family) != n:
        raise ValueError(f"Expected {n} family members but got {len(family)}.")

    members = []
    for idx, rho in enumerate(family):
        if (witness := ordinary_action_violation(G, n, rho)) is not None:
            msg = f"Family member {idx} fails the action laws at {witness}."
            raise MemberNotAnAction(msg, witness=(idx, *witness))
        members.append(np.array(rho, dtype=np.int64))

    return BinaryAction(G, n, np.stack(members, axis=1))


class BinaryOperation:
    """A binary operation of a carrier, stored as an (n, n) table."""

    def __init__(self, carrier_size: int, table) -> None:
        n = int(carrier_size)
        array = _as_table(table, (n, n), "operation table")
        _check_range(array, n, "operation table")
        array.flags.writeable = False

        self._n = n
        self._table = array

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(carrier_size={self._n})"

    def __repr__(self) -> str:
        return self.__str__()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryOperation):
            return NotImplemented
        return np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash(self._table.tobytes())

    @property
    def carrier_size(self) -> int:
        return self._n

    @property
    def table(self) -> np.ndarray:
        return self._table


def identity_operation(n: int) -> BinaryOperation:
    """e(x, x') = x'."""
    return BinaryOperation(n, np.broadcast_to(np.arange(n), (n, n)))


def operation_of(a: BinaryAction, g: int) -> BinaryOperation:
    return BinaryOperation(a.carrier_size, a.act[a.group.check_element(g)])


def compose_binary_ops(f: BinaryOperation, g: BinaryOperation) -> BinaryOperation:
    """(f o g)(x, x') = f(x, g(x, x'))."""
    if f.carrier_size != g.carrier_size:
        msg = f"Cannot compose operations on carriers of sizes {f.carrier_size} and {g.carrier_size}."
        raise CarrierMismatch(msg, witness=(f.carrier_size, g.carrier_size))

    return BinaryOperation(f.carrier_size, np.take_along_axis(f.table, g.table, axis=1))


def inverse_operation(f: BinaryOperation) -> BinaryOperation:
    """Returns the inverse of f for the composition above.

    Composition works row by row, so f is invertible exactly when every row
    x' -> f(x, x') is a bijection, and the inverse is the row-wise inverse.

    Raises
    ----------
    NotInvertible: When some row is not a bijection. Witness (x,).
    """
    table = f.table
    for x in range(f.carrier_size):
        if np.unique(table[x]).size != f.carrier_size:
            raise NotInvertible(f"Row {x} is not a bijection.", witness=(x,))

    return BinaryOperation(f.carrier_size, np.argsort(table, axis=1, kind="stable"))
