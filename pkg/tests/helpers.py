"""Brute-force references and instance builders shared by the test modules."""

from __future__ import annotations

import itertools

import numpy as np

from binact import (
    BinaryAction,
    FiniteGroup,
    TotalEquivariantMap,
    from_family,
    is_biequivariant,
    is_distributive,
)


def involutions(n: int) -> list[list[int]]:
    """The identity and every transposition of n points."""
    perms = [list(range(n))]
    for i, j in itertools.combinations(range(n), 2):
        p = list(range(n))
        p[i], p[j] = j, i
        perms.append(p)
    return perms


def z2_family_actions(z2: FiniteGroup, n: int) -> list[BinaryAction]:
    """Every Z2 action whose members act by the identity or a transposition."""
    members = [[list(range(n)), p] for p in involutions(n)]
    return [from_family(z2, n, list(family)) for family in itertools.product(members, repeat=n)]


def distributive_z2_actions(z2: FiniteGroup, n: int) -> list[BinaryAction]:
    return [a for a in z2_family_actions(z2, n) if is_distributive(a)]


def biequivariant_maps(source: BinaryAction, target: BinaryAction) -> list[TotalEquivariantMap]:
    """Every bi-equivariant map between the two carriers, by exhaustion."""
    maps = []
    for values in itertools.product(range(target.carrier_size), repeat=source.carrier_size):
        F = TotalEquivariantMap(source, target, values)
        if is_biequivariant(F):
            maps.append(F)
    return maps


def brute_force_orbit(a: BinaryAction, x: int) -> set[int]:
    current = {x}
    while True:
        nxt = {int(a.act[g, u, v]) for g in range(a.group.order) for u in current for v in current}
        if nxt <= current:
            return current
        current |= nxt


def random_nonempty_subset(rng: np.random.Generator, n: int) -> list[int]:
    size = int(rng.integers(1, n + 1))
    return sorted(int(x) for x in rng.choice(n, size=size, replace=False))
