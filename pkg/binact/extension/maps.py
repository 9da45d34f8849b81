"""Maps between binary G-spaces, bi-equivariance and isotropy groups.

A map F from the carrier of `source` to the carrier of `target` is
bi-equivariant when F(g(x1, x2)) = g(F(x1), F(x2)) for all g, x1, x2. A
bi-equivariant F cannot enlarge isotropy groups:

    G(x, x') = {g : g(x, x') = x'}  is contained in  G(F(x), F(x')).

Classes
---------
- PartialEquivariantMap: f defined on a subset A of the source carrier.
- TotalEquivariantMap: F defined on all of a bi-invariant subset (usually the
  whole carrier), with a flag recording a successful certification.
- IsotropySubgroup

Functions
---------
- is_biequivariant(F) -> CheckResult
- check_sm1(f) -> CheckResult
- isotropy_group(a, x, xp) -> IsotropySubgroup
- check_isotropy_condition(f) -> CheckResult
- restrict(F, A) -> PartialEquivariantMap
- is_biequimorphism(F) -> bool
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from ..actions import BinaryAction
from ..exceptions import GroupMismatch, IndexOutOfRange, NotASubgroup
from ..group import ElementSet, is_subgroup
from ..orbits import SubsetOfCarrier
from ..utils import CheckResult, as_witness
from ..utils.table_kernels import (
    biequivariance_witness,
    isotropy_inclusion_witness,
    sm1_witness,
)


def _check_same_group(source: BinaryAction, target: BinaryAction) -> None:
    if source.group != target.group:
        msg = (
            f"Source and target are acted on by different groups of orders "
            f"{source.group.order} and {target.group.order}."
        )
        raise GroupMismatch(msg, witness=(source.group.order, target.group.order))


def _check_values(values: np.ndarray, target: BinaryAction) -> None:
    bad = np.flatnonzero((values < 0) | (values >= target.carrier_size))
    if bad.size:
        i = int(bad[0])
        msg = f"Value {values[i]} is not a point of a target carrier of size {target.carrier_size}."
        raise IndexOutOfRange(msg, witness=(i, int(values[i])))


class PartialEquivariantMap:
    """A map f: A -> Y from a subset A of the source carrier.

    Attributes
    ----------
    source, target: BinaryAction
        Binary G-spaces of the same group.

    domain: SubsetOfCarrier
        The subset A.

    values: tuple of int
        values[i] = f(domain.members[i]).
    """

    def __init__(
        self,
        source: BinaryAction,
        target: BinaryAction,
        domain: SubsetOfCarrier,
        values: Iterable[int],
    ) -> None:
        """
        Raises
        ----------
        GroupMismatch: When source and target have different groups.

        ValueError: When the domain does not live on the source carrier or the
        number of values does not match it.

        IndexOutOfRange: When a value is not a target point.
        """
        _check_same_group(source, target)

        if domain.carrier_size != source.carrier_size:
            raise ValueError("The domain is not a subset of the source carrier.")

        array = np.array(list(values), dtype=np.int64)
        if array.shape != (len(domain),):
            raise ValueError(f"Expected {len(domain)} values but got {array.shape[0]}.")
        _check_values(array, target)

        self.source = source
        self.target = target
        self.domain = domain
        self.values = tuple(int(y) for y in array)

    @classmethod
    def from_pairs(
        cls, source: BinaryAction, target: BinaryAction, pairs: Iterable[tuple[int, int]]
    ) -> PartialEquivariantMap:
        """Raises ValueError when a point is given two different values."""
        mapping: dict[int, int] = {}
        for a, y in pairs:
            a, y = int(a), int(y)
            if mapping.setdefault(a, y) != y:
                raise ValueError(f"Point {a} is mapped to both {mapping[a]} and {y}.")

        domain = SubsetOfCarrier.of(source.carrier_size, mapping)
        return cls(source, target, domain, [mapping[a] for a in domain])

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(domain={self.domain})"

    def __repr__(self) -> str:
        return self.__str__()

    def __call__(self, a: int) -> int:
        return self.as_dict()[a]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain.members, self.values))

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.domain.members, self.values))

    def full_values(self) -> np.ndarray:
        """Length-n table holding f on the domain and -1 elsewhere."""
        full = np.full(self.source.carrier_size, -1, dtype=np.int64)
        full[self.domain.indices()] = self.values
        return full


class TotalEquivariantMap:
    """A map F defined on a whole bi-invariant subset of the source carrier.

    Attributes
    ----------
    values: np.ndarray
        Read-only length-n table; -1 outside the domain.

    domain: SubsetOfCarrier
        Where F is defined. Defaults to the whole source carrier.

    certified: bool
        Set by is_biequivariant once the map passed the exhaustive check.
    """

    def __init__(
        self,
        source: BinaryAction,
        target: BinaryAction,
        values: Iterable[int] | Mapping[int, int],
        domain: SubsetOfCarrier | None = None,
    ) -> None:
        _check_same_group(source, target)
        n = source.carrier_size

        if domain is None:
            domain = SubsetOfCarrier.full(n)

        if isinstance(values, Mapping):
            full = np.full(n, -1, dtype=np.int64)
            for x, y in values.items():
                full[source.check_point(x)] = y
        else:
            full = np.array(list(values), dtype=np.int64)

        if full.shape != (n,):
            raise ValueError(f"Expected {n} values but got shape {full.shape}.")

        mask = domain.mask()
        _check_values(full[mask], target)
        if (full[~mask] != -1).any():
            raise ValueError("Points outside the domain must be mapped to -1.")

        full.flags.writeable = False

        self.source = source
        self.target = target
        self.domain = domain
        self.values = full
        self.certified = False

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(values={self.values.tolist()}, certified={self.certified})"

    def __repr__(self) -> str:
        return self.__str__()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalEquivariantMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def __call__(self, x: int) -> int:
        if x not in self.domain:
            raise IndexOutOfRange(f"{x} is not in the domain of the map.", witness=(x,))
        return int(self.values[x])

    def lines(self) -> list[str]:
        return [f"{x} -> {self.values[x]}" for x in self.domain]


@dataclass(frozen=True)
class IsotropySubgroup:
    """G(x, x') = {g : g(x, x') = x'}."""

    pair: tuple[int, int]
    members: ElementSet

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def __len__(self) -> int:
        return len(self.members)


def is_biequivariant(F: TotalEquivariantMap) -> CheckResult:
    """Checks F(g(x1, x2)) = g(F(x1), F(x2)) over all g and all x1, x2 in the
    domain, and marks F certified on success.

    The witness is the first failing (g, x1, x2). A domain that is not
    bi-invariant fails at the first pair leaving it.
    """
    _check_same_group(F.source, F.target)

    witness = biequivariance_witness(F.source.act, F.target.act, F.values, F.domain.mask())
    result = CheckResult.from_witness(as_witness(witness))
    if result:
        F.certified = True
    return result


def check_sm1(f: PartialEquivariantMap) -> CheckResult:
    """Checks f(g(a1, a2)) = g(f(a1), f(a2)) whenever a1, a2 and g(a1, a2) all
    lie in the domain. Witness (g, a1, a2)."""
    witness = sm1_witness(f.source.act, f.target.act, f.full_values(), f.domain.mask())
    return CheckResult.from_witness(as_witness(witness))


def isotropy_group(a: BinaryAction, x: int, xp: int) -> IsotropySubgroup:
    x, xp = a.check_point(x), a.check_point(xp)
    members = frozenset(int(g) for g in np.flatnonzero(a.act[:, x, xp] == xp))

    # The composition axiom makes this a subgroup; kept as a consistency check.
    if not is_subgroup(a.group, members):
        raise NotASubgroup(f"G({x}, {xp}) is not a subgroup.", witness=tuple(sorted(members)))

    return IsotropySubgroup((x, xp), members)


def check_isotropy_condition(f: PartialEquivariantMap) -> CheckResult:
    """Checks G(a, a') is contained in G(f(a), f(a')) for all a, a' in the
    domain. Witness (a, a', g) with g in the first group but not the second."""
    witness = isotropy_inclusion_witness(
        f.source.act, f.target.act, f.domain.indices(), f.full_values()
    )
    return CheckResult.from_witness(as_witness(witness))


def restrict(F: TotalEquivariantMap, A: SubsetOfCarrier) -> PartialEquivariantMap:
    """Raises ValueError when A is not contained in the domain of F."""
    if not A.issubset(F.domain):
        raise ValueError(f"{A} is not contained in the domain {F.domain}.")
    return PartialEquivariantMap(F.source, F.target, A, F.values[A.indices()].tolist())


def is_biequimorphism(F: TotalEquivariantMap) -> bool:
    """Whether F is a bi-equivariant bijection between the two carriers."""
    if len(F.domain) != F.source.carrier_size or F.source.carrier_size != F.target.carrier_size:
        return False

    if np.unique(F.values).size != F.target.carrier_size:
        return False

    return bool(is_biequivariant(F))
