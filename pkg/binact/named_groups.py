"""Registry of named group families.

A family is resolved from a spec string such as "cyclic:3", "symmetric:3",
"dihedral:4", "klein4" or "trivial". New families register themselves by
subclassing GroupFamily and setting `names`.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from functools import lru_cache

import numpy as np

from .group import FiniteGroup


class GroupFamily(ABC):
    """Abstract base class for named group families.

    Attributes
    ----------
    names: list of str
        Names under which the family is registered. Setting it on a subclass
        registers the subclass in REGISTRY.

    parametrized: bool
        Whether the spec carries a positive integer parameter after a colon.

    REGISTRY: dict of (str, subclass of GroupFamily)
        Registry of all families.

    Interface
    ----------
    Subclasses must implement table(param), returning the Cayley table.
    """

    names: list[str] = None
    parametrized: bool = True
    REGISTRY: dict[str, type[GroupFamily]] = {}

    def __init_subclass__(cls, **kwargs) -> None:
        if (names := cls.names) is not None:
            GroupFamily.REGISTRY.update({name: cls for name in names})

    def __str__(self) -> str:
        return f"{self.__class__.__name__}()"

    def __repr__(self) -> str:
        return self.__str__()

    @abstractmethod
    def table(self, param: int | None) -> np.ndarray:
        """Method to build the Cayley table of the member with the given parameter."""

    def build(self, param: int | None) -> FiniteGroup:
        if self.parametrized and (param is None or param < 1):
            raise ValueError(f"{self.names[0]} needs a positive integer parameter.")
        if not self.parametrized and param is not None:
            raise ValueError(f"{self.names[0]} takes no parameter.")
        return FiniteGroup(self.table(param))


class Cyclic(GroupFamily):
    names = ["cyclic", "z"]

    def table(self, param: int | None) -> np.ndarray:
        elements = np.arange(param)
        return (elements[:, None] + elements[None, :]) % param


class Trivial(GroupFamily):
    names = ["trivial"]
    parametrized = False

    def table(self, param: int | None) -> np.ndarray:
        return np.zeros((1, 1), dtype=np.int64)


class Klein4(GroupFamily):
    names = ["klein4", "v4"]
    parametrized = False

    def table(self, param: int | None) -> np.ndarray:
        elements = np.arange(4)
        return elements[:, None] ^ elements[None, :]


class Symmetric(GroupFamily):
    """Permutations of 0..k-1 in lexicographic order, so the identity is
    element 0. The product is composition, (pq)(i) = p(q(i))."""

    names = ["symmetric", "s"]

    def table(self, param: int | None) -> np.ndarray:
        perms = list(itertools.permutations(range(param)))
        index = {p: i for i, p in enumerate(perms)}
        table = np.empty((len(perms), len(perms)), dtype=np.int64)

        for i, p in enumerate(perms):
            for j, q in enumerate(perms):
                table[i, j] = index[tuple(p[q[x]] for x in range(param))]

        return table


class Dihedral(GroupFamily):
    """Symmetries of a k-gon; r^i s^j is element i + k*j."""

    names = ["dihedral", "d"]

    def table(self, param: int | None) -> np.ndarray:
        k = param
        table = np.empty((2 * k, 2 * k), dtype=np.int64)

        for a, b in itertools.product(range(2 * k), repeat=2):
            i, j = a % k, a // k
            p, q = b % k, b // k
            rot = (i + (p if j == 0 else -p)) % k
            table[a, b] = rot + k * ((j + q) % 2)

        return table


def parse_group_spec(spec: str) -> tuple[str, int | None]:
    name, _, param = spec.strip().lower().partition(":")
    if not param:
        return name, None
    try:
        return name, int(param)
    except ValueError:
        raise ValueError(f"Group parameter in {spec!r} is not an integer.") from None


@lru_cache(maxsize=None)
def group_factory(spec: str) -> FiniteGroup:
    """Builds the named group described by spec, e.g. "symmetric:3".

    Raises
    ----------
    ValueError: When no family with that name exists or the parameter is invalid.
    """
    name, param = parse_group_spec(spec)
    cls = GroupFamily.REGISTRY.get(name)
    if cls is None:
        raise ValueError(f"Group family with the name {name!r} does not exist.")
    return cls().build(param)
