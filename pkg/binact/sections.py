"""Cross sections of the projection onto the orbit space.

A cross section picks one point in every orbit. Cross sections correspond
one to one with transversals: subsets meeting every orbit in exactly one
point. Every subset of a finite carrier is closed, so only this set-theoretic
content is checked.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass

from .exceptions import CarrierMismatch, NotATransversal
from .orbits import OrbitPartition, SubsetOfCarrier


@dataclass(frozen=True)
class CrossSection:
    """A section sigma of the projection pi, with chosen[k] = sigma(k)."""

    partition: OrbitPartition
    chosen: tuple[int, ...]

    def __post_init__(self) -> None:
        orbit_of = self.partition.orbit_of

        if len(self.chosen) != self.partition.orbit_count:
            msg = f"Expected one point per orbit but got {len(self.chosen)} for {self.partition.orbit_count} orbits."
            raise ValueError(msg)

        for k, x in enumerate(self.chosen):
            if orbit_of[self.partition.action.check_point(x)] != k:
                msg = f"Point {x} does not lie in orbit {k}."
                raise NotATransversal(msg, witness=(k, x))

    def image(self) -> SubsetOfCarrier:
        return SubsetOfCarrier.of(self.partition.action.carrier_size, self.chosen)


def _hits(p: OrbitPartition, A: SubsetOfCarrier) -> list[int]:
    if A.carrier_size != p.action.carrier_size:
        msg = f"{A} lives on {A.carrier_size} points but the action has {p.action.carrier_size}."
        raise CarrierMismatch(msg, witness=(A.carrier_size, p.action.carrier_size))

    hits = [0] * p.orbit_count
    for x in A:
        hits[p.orbit_of[x]] += 1
    return hits


def is_transversal(p: OrbitPartition, A: SubsetOfCarrier) -> bool:
    return all(count == 1 for count in _hits(p, A))


def section_from_transversal(p: OrbitPartition, A: SubsetOfCarrier) -> CrossSection:
    """Raises NotATransversal with witness (orbit id, hit count) on the first
    orbit A misses or hits more than once."""
    for k, count in enumerate(_hits(p, A)):
        if count != 1:
            msg = f"{A} meets orbit {k} in {count} points instead of one."
            raise NotATransversal(msg, witness=(k, count))

    chosen = [-1] * p.orbit_count
    for x in A:
        chosen[p.orbit_of[x]] = x

    return CrossSection(p, tuple(chosen))


def iter_transversals(p: OrbitPartition) -> Iterator[SubsetOfCarrier]:
    """Yields every transversal once, in lexicographic order of the choice vectors."""
    n = p.action.carrier_size
    for chosen in itertools.product(*(block.members for block in p.blocks())):
        yield SubsetOfCarrier.of(n, chosen)


def enumerate_transversals(p: OrbitPartition, limit: int | None = None) -> list[SubsetOfCarrier]:
    """Lists transversals in lexicographic order of the choice vectors, at
    most limit of them.

    Raises
    ----------
    ValueError: When limit < 1.
    """
    if limit is not None and limit < 1:
        raise ValueError(f"The limit must be at least 1 but got {limit}.")

    return list(itertools.islice(iter_transversals(p), limit))


def count_transversals(p: OrbitPartition) -> int:
    """The product of the orbit sizes."""
    return math.prod(len(block) for block in p.blocks())
