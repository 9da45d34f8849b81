from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from binact import FiniteGroup, conjugate_subgroup, group_factory, group_from_table, inverse, is_subgroup
from binact.exceptions import NoIdentity, NoInverse, NotASubgroup, NotAssociative, NotClosed


@pytest.mark.parametrize(
    "spec, order, abelian",
    [
        ("trivial", 1, True),
        ("cyclic:4", 4, True),
        ("klein4", 4, True),
        ("symmetric:3", 6, False),
        ("dihedral:4", 8, False),
    ],
)
def test_named_groups(spec, order, abelian):
    G = group_factory(spec)
    assert G.order == order
    assert G.is_abelian == abelian
    assert G.identity == 0


def test_unknown_group_family():
    with pytest.raises(ValueError):
        group_factory("quaternion:8")


def test_named_group_needs_parameter():
    with pytest.raises(ValueError):
        group_factory("cyclic")


def test_table_is_read_only(named_group):
    with pytest.raises(ValueError):
        named_group.cayley[0, 0] = 0


def test_non_square_table():
    with pytest.raises(ValueError):
        group_from_table([[0, 1]])


def test_not_closed():
    with pytest.raises(NotClosed) as info:
        group_from_table([[0, 1], [1, 2]])
    assert info.value.witness == (1, 1, 2)


def test_not_associative():
    # Subtraction mod 3 is closed but not associative.
    table = [[(a - b) % 3 for b in range(3)] for a in range(3)]
    with pytest.raises(NotAssociative) as info:
        group_from_table(table)
    a, b, c = info.value.witness
    C = np.array(table)
    assert C[C[a, b], c] != C[a, C[b, c]]


def test_no_identity():
    with pytest.raises(NoIdentity):
        group_from_table([[0, 0], [0, 0]])


def test_no_inverse():
    # The multiplicative monoid {1, 0}: associative with identity 0, but 1 is absorbing.
    with pytest.raises(NoInverse) as info:
        group_from_table([[0, 1], [1, 1]])
    assert info.value.witness == (1,)


def test_symmetric_group_layout(s3):
    assert [s3.element_order(g) for g in s3.elements()] == [1, 2, 2, 3, 3, 2]
    assert s3.multiply(3, 4) == 0
    assert s3.generators() == (1, 2)
    assert s3.generated_subgroup([3]) == frozenset({0, 3, 4})


def test_inverse(named_group):
    for g in named_group.elements():
        assert named_group.multiply(g, inverse(named_group, g)) == named_group.identity


def test_is_subgroup(s3):
    assert is_subgroup(s3, {0, 3, 4})
    assert is_subgroup(s3, {0, 1})
    assert not is_subgroup(s3, {0, 1, 2})
    assert not is_subgroup(s3, set())


def test_conjugate_subgroup(s3):
    # Conjugating the stabilizer of 0 by the transposition (0 1) gives the stabilizer of 1.
    assert conjugate_subgroup(s3, 2, {0, 1}) == frozenset({0, 5})
    assert conjugate_subgroup(s3, 2, {0, 3, 4}) == frozenset({0, 3, 4})


def test_conjugate_subgroup_rejects_non_subgroup(s3):
    with pytest.raises(NotASubgroup):
        conjugate_subgroup(s3, 1, {0, 1, 2})


@given(st.sampled_from(["cyclic:5", "klein4", "symmetric:3", "dihedral:3"]), st.data())
def test_group_laws(spec, data):
    G = group_factory(spec)
    elements = st.integers(0, G.order - 1)
    a, b, c = data.draw(elements), data.draw(elements), data.draw(elements)

    assert G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c))
    assert G.multiply(G.identity, a) == a == G.multiply(a, G.identity)


def test_equality_and_round_trip(named_group):
    copy = FiniteGroup(named_group.to_table())
    assert copy == named_group
    assert hash(copy) == hash(named_group)
