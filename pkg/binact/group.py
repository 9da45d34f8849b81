"""Finite groups given by their Cayley tables.

Elements are the dense indices 0..m-1. The identity and the inverse table
are never declared: they are discovered from the table during validation,
so the table is the single source of truth.

Classes
---------
- FiniteGroup: A validated, immutable group of order m.

Functions
---------
- group_from_table(table) -> FiniteGroup
- inverse(G, g) -> int
- is_subgroup(G, S) -> bool
- conjugate_subgroup(G, g, H) -> frozenset of int
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

import numpy as np

from .exceptions import (
    IndexOutOfRange,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotClosed,
)
from .utils import as_witness
from .utils.table_kernels import associativity_witness

ElementSet = frozenset[int]


def _as_square_table(table: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    raw = np.asarray(table)
    if raw.size and raw.dtype.kind not in "iu":
        raise TypeError(f"Expected integer entries in the Cayley table but got {raw.dtype}.")
    cayley = raw.astype(np.int64)

    if cayley.ndim != 2 or cayley.shape[0] != cayley.shape[1] or cayley.shape[0] < 1:
        msg = f"A Cayley table must be a non-empty square table, got shape {cayley.shape}."
        raise ValueError(msg)

    return cayley


def _closure_witness(cayley: np.ndarray) -> tuple[int, int, int] | None:
    m = cayley.shape[0]
    bad = np.argwhere((cayley < 0) | (cayley >= m))
    if bad.size == 0:
        return None
    row, col = (int(i) for i in bad[0])
    return row, col, int(cayley[row, col])


def _find_identity(cayley: np.ndarray) -> int:
    elements = np.arange(cayley.shape[0])
    left = (cayley == elements[None, :]).all(axis=1)
    right = (cayley == elements[:, None]).all(axis=0)
    candidates = np.flatnonzero(left & right)
    if candidates.size == 0:
        raise NoIdentity("The table has no two-sided identity element.")
    return int(candidates[0])


def _find_inverses(cayley: np.ndarray, identity: int) -> np.ndarray:
    m = cayley.shape[0]
    inverse = np.empty(m, dtype=np.int64)

    for g in range(m):
        hits = np.flatnonzero((cayley[g, :] == identity) & (cayley[:, g] == identity))
        if hits.size == 0:
            raise NoInverse(f"Element {g} has no two-sided inverse.", witness=(g,))
        inverse[g] = hits[0]

    return inverse


class FiniteGroup:
    """A finite group of order m, stored as its Cayley table.

    The table is validated exhaustively on construction and the instance is
    immutable afterwards, so it is safe to share across threads.

    Attributes
    ----------
    order: int
        Number of elements m.

    cayley: np.ndarray
        Read-only (m, m) table with cayley[a, b] = ab.

    identity: int
        Index of the identity element.

    inverse: np.ndarray
        Read-only length-m table of inverses.

    Methods
    ----------
    multiply(a, b) -> int
        Returns the product ab.

    element_order(g) -> int
        Returns the order of g.

    generated_subgroup(gens) -> frozenset
        Returns the subgroup generated by gens.

    generators() -> tuple
        Returns a generating set, chosen greedily in index order.
    """

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray) -> None:
        """
        Arguments
        ----------
        table: Square table of element indices, table[a][b] = ab.

        Raises
        ----------
        ValueError: When the table is not square.

        NotClosed: When an entry is outside [0, m). Witness (a, b, entry).

        NotAssociative: When (ab)c != a(bc). Witness (a, b, c).

        NoIdentity: When no two-sided identity exists.

        NoInverse: When an element has no two-sided inverse. Witness (g,).
        """
        cayley = _as_square_table(table)

        if (witness := _closure_witness(cayley)) is not None:
            msg = f"Entry {witness[2]} at ({witness[0]}, {witness[1]}) is not an element."
            raise NotClosed(msg, witness=witness)

        if (witness := as_witness(associativity_witness(cayley))) is not None:
            a, b, c = witness
            msg = f"The table is not associative: ({a}{b}){c} != {a}({b}{c})."
            raise NotAssociative(msg, witness=witness)

        identity = _find_identity(cayley)
        inverse = _find_inverses(cayley, identity)

        cayley.flags.writeable = False
        inverse.flags.writeable = False

        self._cayley = cayley
        self._identity = identity
        self._inverse = inverse
        self._is_abelian: bool | None = None

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(order={self.order})"

    def __repr__(self) -> str:
        return self.__str__()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or np.array_equal(self._cayley, other._cayley)

    def __hash__(self) -> int:
        return hash(self._cayley.tobytes())

    @property
    def order(self) -> int:
        return self._cayley.shape[0]

    @property
    def cayley(self) -> np.ndarray:
        return self._cayley

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def inverse(self) -> np.ndarray:
        return self._inverse

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = bool(np.array_equal(self._cayley, self._cayley.T))
        return self._is_abelian

    def elements(self) -> range:
        return range(self.order)

    def check_element(self, g: int) -> int:
        if not 0 <= g < self.order:
            msg = f"{g} is not an element of a group of order {self.order}."
            raise IndexOutOfRange(msg, witness=(g,))
        return int(g)

    def multiply(self, a: int, b: int) -> int:
        return int(self._cayley[a, b])

    def element_order(self, g: int) -> int:
        g = self.check_element(g)
        power, k = g, 1
        while power != self._identity:
            power = self.multiply(power, g)
            k += 1
        return k

    def generated_subgroup(self, gens: Iterable[int]) -> ElementSet:
        gens = [self.check_element(s) for s in gens]
        seen = {self._identity}
        queue = deque(seen)

        # Closure under right multiplication by generators; inverses are powers.
        while queue:
            u = queue.popleft()
            for s in gens:
                w = self.multiply(u, s)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

        return frozenset(seen)

    def generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = self.generated_subgroup(gens)

        for g in self.elements():
            if g not in span:
                gens.append(g)
                span = self.generated_subgroup(gens)

        return tuple(gens)

    def to_table(self) -> list[list[int]]:
        return self._cayley.tolist()


def group_from_table(table: Sequence[Sequence[int]] | np.ndarray) -> FiniteGroup:
    """Validates the table and returns the group it defines."""
    return FiniteGroup(table)


def inverse(G: FiniteGroup, g: int) -> int:
    return int(G.inverse[G.check_element(g)])


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    S = set(S)

    if not S or any(not 0 <= s < G.order for s in S):
        return False

    if any(int(G.inverse[s]) not in S for s in S):
        return False

    return all(G.multiply(a, b) in S for a in S for b in S)


def conjugate_subgroup(G: FiniteGroup, g: int, H: Iterable[int]) -> ElementSet:
    """Returns gHg^-1.

    Raises
    ----------
    NotASubgroup: When H is not a subgroup of G. Witness is H, sorted.
    """
    g = G.check_element(g)
    H = frozenset(int(h) for h in H)

    if not is_subgroup(G, H):
        raise NotASubgroup(f"{sorted(H)} is not a subgroup.", witness=tuple(sorted(H)))

    members = np.fromiter(sorted(H), dtype=np.int64)
    conjugates = G.cayley[G.cayley[g, members], G.inverse[g]]
    return frozenset(int(c) for c in conjugates)
