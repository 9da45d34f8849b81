"""Set application, bi-invariance, saturation, orbits and the orbit space.

For K a set of group elements and A, B subsets of the carrier,

    K(A, B) = {g(a, b) : g in K, a in A, b in B}.

A is bi-invariant when G(A, A) = A. The saturation of A is the least
bi-invariant superset; it is reached by iterating A^k = G(A^(k-1), A^(k-1)).
The orbit of x is the saturation of {x}. Orbits of a general binary action
may overlap; for a distributive action the orbit of x is G(x, x) and the
orbits partition the carrier, which defines the orbit space X|G.

On a finite discrete carrier every subset is closed, so the closedness of
G(A, A) and of the projection onto X|G carry no content here.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from .actions import BinaryAction, is_distributive
from .exceptions import EmptyInput, IndexOutOfRange, NotDistributive, OverlappingOrbits

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsetOfCarrier:
    """A subset of the carrier {0, ..., n-1}, as a sorted duplicate-free tuple.

    Use SubsetOfCarrier.of to build one from an arbitrary iterable.
    """

    carrier_size: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members, n = self.members, self.carrier_size

        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError("Subset members must be sorted and duplicate-free.")

        if members and not (0 <= members[0] and members[-1] < n):
            bad = members[0] if members[0] < 0 else members[-1]
            msg = f"{bad} is not a point of a carrier of size {n}."
            raise IndexOutOfRange(msg, witness=(bad,))

    @classmethod
    def of(cls, carrier_size: int, members: Iterable[int]) -> SubsetOfCarrier:
        return cls(int(carrier_size), tuple(sorted({int(x) for x in members})))

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> SubsetOfCarrier:
        return cls(mask.shape[0], tuple(int(x) for x in np.flatnonzero(mask)))

    @classmethod
    def full(cls, carrier_size: int) -> SubsetOfCarrier:
        return cls(carrier_size, tuple(range(carrier_size)))

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.members) + "}"

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        return x in set(self.members)

    def mask(self) -> np.ndarray:
        mask = np.zeros(self.carrier_size, dtype=np.bool_)
        mask[list(self.members)] = True
        return mask

    def indices(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def union(self, other: SubsetOfCarrier) -> SubsetOfCarrier:
        return SubsetOfCarrier.of(self.carrier_size, self.members + other.members)

    def intersection(self, other: SubsetOfCarrier) -> SubsetOfCarrier:
        return SubsetOfCarrier.of(self.carrier_size, set(self.members) & set(other.members))

    def issubset(self, other: SubsetOfCarrier) -> bool:
        return set(self.members) <= set(other.members)


def apply_set(
    a: BinaryAction, K: Iterable[int], A: SubsetOfCarrier, B: SubsetOfCarrier
) -> SubsetOfCarrier:
    """Returns K(A, B)."""
    elements = np.array(sorted({a.group.check_element(g) for g in K}), dtype=np.int64)

    if elements.size == 0 or not A.members or not B.members:
        return SubsetOfCarrier(a.carrier_size, ())

    values = a.act[np.ix_(elements, A.indices(), B.indices())]
    return SubsetOfCarrier.of(a.carrier_size, np.unique(values).tolist())


def point_orbit_set(a: BinaryAction, x: int) -> SubsetOfCarrier:
    """Returns G(x, x)."""
    point = SubsetOfCarrier.of(a.carrier_size, [a.check_point(x)])
    return apply_set(a, a.group.elements(), point, point)


def is_bi_invariant(a: BinaryAction, A: SubsetOfCarrier) -> bool:
    return apply_set(a, a.group.elements(), A, A) == A


def saturate(a: BinaryAction, A: SubsetOfCarrier) -> tuple[SubsetOfCarrier, int]:
    """Returns the saturation of A and the number of rounds A^k = G(A^(k-1), A^(k-1))
    computed until the sequence stopped growing.

    Each round only combines pairs involving a point added in the previous
    round, since pairs of older points were already combined. A bi-invariant A
    needs exactly one round, and the depth never exceeds the carrier size.

    Raises
    ----------
    EmptyInput: When A is empty.
    """
    if not A.members:
        raise EmptyInput("Cannot saturate the empty set.")

    act = a.act
    current = A.mask()
    frontier = current.copy()
    depth = 0

    while True:
        depth += 1
        old = np.flatnonzero(current)
        new = np.flatnonzero(frontier)

        produced = np.zeros(a.carrier_size, dtype=np.bool_)
        produced[act[:, new[:, None], old[None, :]].ravel()] = True
        produced[act[:, old[:, None], new[None, :]].ravel()] = True

        frontier = produced & ~current
        log.debug("saturation round %d: %d new points", depth, int(frontier.sum()))

        if not frontier.any():
            return SubsetOfCarrier.from_mask(current), depth

        current |= frontier


def orbit(a: BinaryAction, x: int) -> SubsetOfCarrier:
    """The least bi-invariant set containing x."""
    point = SubsetOfCarrier.of(a.carrier_size, [a.check_point(x)])
    return saturate(a, point)[0]


def induced_subaction(a: BinaryAction, A: SubsetOfCarrier) -> BinaryAction:
    """The binary action a bi-invariant set inherits, re-indexed so that
    A.members[i] becomes point i.

    Raises
    ----------
    ValueError: When A is empty or not bi-invariant.
    """
    if not A.members or not is_bi_invariant(a, A):
        raise ValueError(f"{A} is not a non-empty bi-invariant set.")

    members = A.indices()
    position = np.full(a.carrier_size, -1, dtype=np.int64)
    position[members] = np.arange(members.size)

    table = position[a.act[np.ix_(np.arange(a.group.order), members, members)]]
    return BinaryAction(a.group, members.size, table)


class OrbitPartition:
    """The orbit space X|G of a distributive binary action.

    Attributes
    ----------
    action: BinaryAction
        The partitioned action.

    orbit_of: np.ndarray
        Read-only length-n table of orbit ids; this is the projection pi.

    representatives: tuple of int
        Smallest member of each orbit, indexed by orbit id.

    orbit_count: int
        Number of orbits. Ids are dense and ordered by smallest member.
    """

    def __init__(
        self, action: BinaryAction, orbit_of: np.ndarray, representatives: tuple[int, ...]
    ) -> None:
        orbit_of = np.array(orbit_of, dtype=np.int64)
        orbit_of.flags.writeable = False

        self.action = action
        self.orbit_of = orbit_of
        self.representatives = tuple(representatives)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(orbit_count={self.orbit_count})"

    def __repr__(self) -> str:
        return self.__str__()

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    def members(self, k: int) -> SubsetOfCarrier:
        if not 0 <= k < self.orbit_count:
            raise IndexOutOfRange(f"{k} is not an orbit id.", witness=(k,))
        return SubsetOfCarrier.from_mask(self.orbit_of == k)

    def blocks(self) -> list[SubsetOfCarrier]:
        return [self.members(k) for k in range(self.orbit_count)]


def orbit_partition(a: BinaryAction) -> OrbitPartition:
    """Partitions the carrier of a distributive action into its orbits.

    Raises
    ----------
    NotDistributive: When the action is not distributive. Witness (g, h, x, x1, x2).

    OverlappingOrbits: When two distinct orbits share a point. Cannot happen
    for a distributive action; kept as a consistency check. Witness (x, y).
    """
    if not (verdict := is_distributive(a)):
        msg = "Orbit spaces are only defined for distributive actions."
        raise NotDistributive(msg, witness=verdict.witness)

    n = a.carrier_size
    orbits = [orbit(a, x) for x in range(n)]
    orbit_of = np.full(n, -1, dtype=np.int64)
    representatives: list[int] = []

    for x in range(n):
        if orbit_of[x] != -1:
            continue
        k = len(representatives)
        representatives.append(x)
        for y in orbits[x]:
            if orbit_of[y] != -1:
                msg = f"The orbit of {x} meets the orbit of {representatives[orbit_of[y]]}."
                raise OverlappingOrbits(msg, witness=(x, y))
            orbit_of[y] = k

    for x in range(n):
        if orbits[x] != orbits[representatives[orbit_of[x]]]:
            msg = f"The orbit of {x} differs from the orbit containing it."
            raise OverlappingOrbits(msg, witness=(x, representatives[orbit_of[x]]))

    return OrbitPartition(a, orbit_of, tuple(representatives))


def project(p: OrbitPartition, x: int) -> int:
    """pi(x): the orbit id of x."""
    return int(p.orbit_of[p.action.check_point(x)])
