from __future__ import annotations

import itertools

import pytest
from hypothesis import settings

from binact import (
    BinaryAction,
    FiniteGroup,
    canonical_self_action,
    from_family,
    from_ordinary_action,
    group_factory,
    trivial_action,
)

from .helpers import distributive_z2_actions

# First calls compile the kernels.
settings.register_profile("binact", deadline=None, max_examples=60)
settings.load_profile("binact")

GROUP_SPECS = ["trivial", "cyclic:2", "cyclic:3", "cyclic:4", "klein4", "symmetric:3"]


@pytest.fixture(params=GROUP_SPECS)
def named_group(request) -> FiniteGroup:
    return group_factory(request.param)


@pytest.fixture
def z2() -> FiniteGroup:
    return group_factory("cyclic:2")


@pytest.fixture
def z3() -> FiniteGroup:
    return group_factory("cyclic:3")


@pytest.fixture
def s3() -> FiniteGroup:
    return group_factory("symmetric:3")


@pytest.fixture
def two_orbit_action(z2) -> BinaryAction:
    """Z2 swapping 0 and 1 and fixing 2, whatever the first argument."""
    member = [[0, 1, 2], [1, 0, 2]]
    return from_family(z2, 3, [member, member, member])


@pytest.fixture
def transposition_action(z2) -> BinaryAction:
    """Z2 on three points where the member at x is the transposition fixing x."""
    family = [[[0, 1, 2], [0, 2, 1]], [[0, 1, 2], [2, 1, 0]], [[0, 1, 2], [1, 0, 2]]]
    return from_family(z2, 3, family)


@pytest.fixture
def s3_on_three_points(s3) -> BinaryAction:
    rho = [list(p) for p in itertools.permutations(range(3))]
    return from_ordinary_action(s3, 3, rho)


def distributive_corpus() -> list[tuple[str, BinaryAction]]:
    corpus = []
    for spec in GROUP_SPECS:
        G = group_factory(spec)
        corpus.append((f"{spec}-self", canonical_self_action(G, "distributive")))
        corpus.append((f"{spec}-trivial-3", trivial_action(G, 3)))
    z2 = group_factory("cyclic:2")
    for n in (2, 3):
        for i, a in enumerate(distributive_z2_actions(z2, n)):
            corpus.append((f"z2-family-{n}-{i}", a))
    return corpus


CORPUS = distributive_corpus()


@pytest.fixture(params=CORPUS, ids=[name for name, _ in CORPUS])
def distributive_action(request) -> BinaryAction:
    return request.param[1]
