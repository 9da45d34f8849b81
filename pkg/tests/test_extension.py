from __future__ import annotations

import itertools

import numpy as np
import pytest

from binact import (
    PartialEquivariantMap,
    SearchConfig,
    SubsetOfCarrier,
    TotalEquivariantMap,
    canonical_self_action,
    check_isotropy_condition,
    check_sm1,
    check_sm2_bounded,
    check_star_condition,
    conjugate_subgroup,
    enumerate_transversals,
    extend_from_section,
    extend_structural,
    from_family,
    group_factory,
    is_biequimorphism,
    is_biequivariant,
    isotropy_group,
    orbit_partition,
    random_binary_action,
    random_distributive_action,
    restrict,
    saturate,
    trivial_action,
)
from binact.exceptions import (
    BudgetExceeded,
    Conflict,
    GroupMismatch,
    NotATransversal,
    NotDistributive,
    Sm1Violation,
    StarConditionFailed,
)

from .conftest import CORPUS
from .helpers import biequivariant_maps, random_nonempty_subset, z2_family_actions


def subset(n, *points):
    return SubsetOfCarrier.of(n, points)


def partial(source, target, mapping):
    return PartialEquivariantMap.from_pairs(source, target, mapping.items())


def identity_map(a):
    return TotalEquivariantMap(a, a, range(a.carrier_size))


@pytest.fixture
def conflict_map(z2) -> PartialEquivariantMap:
    """Conditions on A hold, but 1(0, 0) = 1(1, 1) = 2 forces two labels on 2."""
    family = [[[0, 1, 2], [2, 1, 0]], [[0, 1, 2], [0, 2, 1]], [[0, 1, 2], [0, 1, 2]]]
    source = from_family(z2, 3, family)
    return partial(source, trivial_action(z2, 2), {0: 0, 1: 1})


def verify_biequivariance_witness(F, witness):
    g, x1, x2 = witness
    return F.values[F.source.act[g, x1, x2]] != F.target.act[g, F.values[x1], F.values[x2]]


def verify_star_witness(f, witness):
    g, h, k, s, a, ap, app = witness
    src, tgt, y = f.source.act, f.target.act, f.full_values()
    holds_in_source = src[g, a, a] == src[h, src[k, ap, ap], src[s, app, app]]
    fails_in_target = tgt[g, y[a], y[a]] != tgt[h, tgt[k, y[ap], y[ap]], tgt[s, y[app], y[app]]]
    return holds_in_source and fails_in_target


class TestMaps:
    def test_identity_is_biequivariant(self, distributive_action):
        F = identity_map(distributive_action)
        assert not F.certified
        assert is_biequivariant(F)
        assert F.certified
        assert is_biequimorphism(F)

    def test_constant_map_into_trivial_action(self, s3_on_three_points, s3):
        F = TotalEquivariantMap(s3_on_three_points, trivial_action(s3, 2), [1, 1, 1])
        assert is_biequivariant(F)
        assert not is_biequimorphism(F)

    def test_non_equivariant_map(self, two_orbit_action):
        F = TotalEquivariantMap(two_orbit_action, two_orbit_action, [2, 2, 0])
        verdict = is_biequivariant(F)
        assert not verdict
        assert not F.certified
        assert verify_biequivariance_witness(F, verdict.witness)

    def test_group_mismatch(self, z2, z3):
        with pytest.raises(GroupMismatch):
            TotalEquivariantMap(trivial_action(z2, 2), trivial_action(z3, 2), [0, 1])

    def test_values_outside_domain(self, two_orbit_action):
        with pytest.raises(ValueError):
            TotalEquivariantMap(two_orbit_action, two_orbit_action, [0, 1, 2], domain=subset(3, 0, 1))

    def test_conflicting_pairs(self, two_orbit_action):
        with pytest.raises(ValueError):
            PartialEquivariantMap.from_pairs(two_orbit_action, two_orbit_action, [(0, 1), (0, 2)])

    def test_restrict(self, two_orbit_action):
        F = identity_map(two_orbit_action)
        assert restrict(F, subset(3, 0, 2)).as_dict() == {0: 0, 2: 2}
        G = TotalEquivariantMap(two_orbit_action, two_orbit_action, [0, 1, -1], domain=subset(3, 0, 1))
        with pytest.raises(ValueError):
            restrict(G, subset(3, 2))


class TestStructuralMaps:
    def test_trivial_actions_always_pass(self, z3):
        a = trivial_action(z3, 3)
        for values in itertools.product(range(3), repeat=2):
            assert check_sm1(partial(a, a, dict(zip([0, 2], values))))

    def test_sm1_violation(self, z3):
        a = canonical_self_action(z3)
        f = partial(a, a, {0: 0, 1: 0})
        verdict = check_sm1(f)
        assert not verdict
        with pytest.raises(Sm1Violation) as info:
            extend_structural(f)
        assert info.value.witness == verdict.witness

    def test_cyclic_identity(self, z3):
        a = canonical_self_action(z3)
        F = extend_structural(partial(a, a, {0: 0}))
        assert F.values.tolist() == [0, 1, 2]
        assert F.certified

    def test_cyclic_into_trivial_action(self, z3):
        a = canonical_self_action(z3)
        F = extend_structural(partial(a, trivial_action(z3, 2), {0: 0}))
        assert F.values.tolist() == [0, 0, 0]
        assert F.certified

    def test_bi_invariant_domain_is_kept(self, two_orbit_action):
        F = extend_structural(partial(two_orbit_action, two_orbit_action, {0: 1, 1: 0}))
        assert F.domain == subset(3, 0, 1)
        assert F.values.tolist() == [1, 0, -1]

    def test_conflict(self, conflict_map):
        assert check_sm1(conflict_map)
        with pytest.raises(Conflict) as info:
            extend_structural(conflict_map)
        e = info.value
        assert (e.point, e.labels) == (2, (0, 1))
        assert e.derivations == (((1, 0, 0, 2),), ((1, 1, 1, 2),))
        assert e.witness_line() == "WITNESS kind=conflict tuple=(2, 0, 1)"

    def test_oracle_reports_conflict(self, conflict_map):
        _, depth = saturate(conflict_map.source, conflict_map.domain)
        verdict = check_sm2_bounded(conflict_map, depth)
        assert depth == 2
        assert verdict.witness == (1, 2, 0, 1)

    def test_oracle_trivial(self, z2):
        a = trivial_action(z2, 2)
        assert check_sm2_bounded(partial(a, a, {1: 0}), 1)

    def test_oracle_budget(self, z3):
        a = canonical_self_action(z3)
        with pytest.raises(BudgetExceeded):
            check_sm2_bounded(partial(a, a, {0: 0}), 3, budget=10)
        with pytest.raises(ValueError):
            check_sm2_bounded(partial(a, a, {0: 0}), 0)

    def test_oracle_agrees_with_propagation(self):
        """Exhaustive over every partial map between tiny binary G-spaces."""
        z2, z3 = group_factory("cyclic:2"), group_factory("cyclic:3")
        sources = z2_family_actions(z2, 2) + z2_family_actions(z2, 3)
        sources += [canonical_self_action(z3), trivial_action(z3, 3)]
        checked = 0

        for source in sources:
            n = source.carrier_size
            for target in (source, trivial_action(source.group, 2)):
                for k in range(1, n + 1):
                    for A in itertools.combinations(range(n), k):
                        for values in itertools.product(range(target.carrier_size), repeat=k):
                            f = partial(source, target, dict(zip(A, values)))
                            try:
                                extend_structural(f)
                                extends = True
                            except (Conflict, Sm1Violation):
                                extends = False
                            _, depth = saturate(source, f.domain)
                            assert bool(check_sm2_bounded(f, depth)) == extends
                            checked += 1

        assert checked > 5000


class TestStructuralRoundTrip:
    def test_restriction_re_extends(self):
        rng = np.random.default_rng(33)
        specs = ["cyclic:2", "cyclic:3", "klein4", "symmetric:3"]
        tuples = 0

        for trial in range(240):
            cfg = SearchConfig(seed=1000 + trial, group_spec=specs[trial % 4], carrier_size=2 + trial % 2)
            source = random_binary_action(cfg)
            other = random_binary_action(cfg, trial=1)
            maps = biequivariant_maps(source, other) if trial % 3 == 0 else []
            maps = maps or biequivariant_maps(source, source)
            F = maps[int(rng.integers(len(maps)))]

            A = subset(source.carrier_size, *random_nonempty_subset(rng, source.carrier_size))
            closure, _ = saturate(source, A)
            E = extend_structural(restrict(F, A))

            assert E.domain == closure
            assert E.values[closure.indices()].tolist() == F.values[closure.indices()].tolist()
            tuples += 1

            # Uniqueness: changing the extension off A breaks bi-equivariance.
            outside = [x for x in closure if x not in A]
            if outside and F.target.carrier_size > 1:
                x = outside[int(rng.integers(len(outside)))]
                values = E.values.copy()
                values[x] = (values[x] + 1) % F.target.carrier_size
                perturbed = TotalEquivariantMap(E.source, E.target, values, domain=closure)
                assert not is_biequivariant(perturbed)

            # Corrupting one value of f is detected or yields a different map.
            if F.target.carrier_size > 1:
                a0 = A.members[int(rng.integers(len(A)))]
                corrupted = restrict(F, A).as_dict()
                corrupted[a0] = (corrupted[a0] + 1) % F.target.carrier_size
                try:
                    C = extend_structural(partial(source, F.target, corrupted))
                except (Conflict, Sm1Violation):
                    continue
                assert C.certified
                assert not np.array_equal(C.values[closure.indices()], F.values[closure.indices()])

        assert tuples >= 200


class TestSectionExtension:
    def test_trivial_actions(self, z3):
        a = trivial_action(z3, 3)
        F = extend_from_section(partial(a, a, {0: 2, 1: 0, 2: 2}))
        assert F.values.tolist() == [2, 0, 2]

    def test_cyclic_identity(self, z3):
        a = canonical_self_action(z3)
        f = partial(a, a, {0: 0})
        assert extend_from_section(f) == extend_structural(f) == identity_map(a)

    def test_constant_into_trivial_action(self):
        z4 = group_factory("cyclic:4")
        F = extend_from_section(partial(canonical_self_action(z4), trivial_action(z4, 4), {0: 2}))
        assert F.values.tolist() == [2, 2, 2, 2]

    def test_star_condition_failure(self, z2):
        f = partial(trivial_action(z2, 1), canonical_self_action(z2), {0: 0})
        assert not check_isotropy_condition(f)
        verdict = check_star_condition(f)
        assert not verdict
        assert verify_star_witness(f, verdict.witness)
        with pytest.raises(StarConditionFailed):
            extend_from_section(f)

    def test_target_must_be_distributive(self, z2):
        swap, identity = [[0, 1], [1, 0]], [[0, 1], [0, 1]]
        target = from_family(z2, 2, [swap, identity])
        f = partial(trivial_action(z2, 1), target, {0: 1})
        assert check_star_condition(f)
        with pytest.raises(NotDistributive):
            extend_from_section(f)

    def test_source_must_be_distributive(self, s3_on_three_points):
        with pytest.raises(NotDistributive):
            check_star_condition(partial(s3_on_three_points, s3_on_three_points, {0: 0}))

    def test_domain_must_be_a_transversal(self, two_orbit_action):
        f = partial(two_orbit_action, two_orbit_action, {0: 0, 1: 1})
        with pytest.raises(NotATransversal):
            extend_from_section(f)

    def test_section_round_trip(self):
        rng = np.random.default_rng(44)
        specs = ["cyclic:2", "cyclic:3", "klein4"]
        pairs = 0

        for trial in range(120):
            cfg = SearchConfig(
                seed=2000 + trial, group_spec=specs[trial % 3], carrier_size=2 + trial % 2, max_trials=2000
            )
            source = random_distributive_action(cfg)
            target = random_distributive_action(cfg, trial=1)
            maps = biequivariant_maps(source, target) or biequivariant_maps(source, source)
            picks = rng.choice(len(maps), size=min(3, len(maps)), replace=False)
            pairs += 1

            for A in enumerate_transversals(orbit_partition(source), limit=20):
                for i in picks:
                    F = maps[int(i)]
                    f = restrict(F, A)
                    assert check_star_condition(f)
                    assert check_isotropy_condition(f)
                    E = extend_from_section(f)
                    assert E == F
                    assert extend_structural(f) == E

        assert pairs >= 100


class TestIsotropy:
    def test_trivial_action(self, s3):
        H = isotropy_group(trivial_action(s3, 2), 0, 1)
        assert H.members == frozenset(range(6))

    def test_self_action(self, s3):
        a = canonical_self_action(s3)
        for x, xp in itertools.product(range(6), repeat=2):
            assert isotropy_group(a, x, xp).members == {0}

    def test_two_orbits(self, two_orbit_action):
        for x in range(3):
            assert isotropy_group(two_orbit_action, x, 2).members == {0, 1}
            assert isotropy_group(two_orbit_action, x, 0).members == {0}

    @pytest.mark.parametrize("name, a", CORPUS, ids=[name for name, _ in CORPUS])
    def test_conjugation(self, name, a):
        G = a.group
        for g, x, xp in itertools.product(G.elements(), range(a.carrier_size), range(a.carrier_size)):
            moved = isotropy_group(a, x, a.evaluate(g, x, xp)).members
            assert moved == conjugate_subgroup(G, g, isotropy_group(a, x, xp).members)

    def test_target_trivial(self, s3):
        f = partial(canonical_self_action(s3), trivial_action(s3, 2), {0: 0, 3: 1})
        assert check_isotropy_condition(f)

    def test_source_trivial(self, s3):
        f = partial(trivial_action(s3, 2), canonical_self_action(s3), {0: 0, 1: 4})
        verdict = check_isotropy_condition(f)
        assert not verdict
        a, ap, g = verdict.witness
        assert g in isotropy_group(f.source, a, ap)
        assert g not in isotropy_group(f.target, f(a), f(ap))

    @pytest.mark.parametrize("name, a", [c for c in CORPUS if c[1].carrier_size <= 3])
    def test_equivariant_maps_shrink_isotropy(self, name, a):
        rng = np.random.default_rng(len(name))
        for F in biequivariant_maps(a, a):
            A = subset(a.carrier_size, *random_nonempty_subset(rng, a.carrier_size))
            assert check_isotropy_condition(restrict(F, A))

    def test_isotropy_inclusion_fixes_representatives(self):
        """Equal source representations give equal target values."""
        for (_, source), (_, target) in itertools.product(CORPUS, repeat=2):
            if source.group != target.group or source.carrier_size > 3 or target.carrier_size > 3:
                continue
            p = orbit_partition(source)
            for A in enumerate_transversals(p, limit=4):
                for values in itertools.product(range(target.carrier_size), repeat=len(A)):
                    f = PartialEquivariantMap(source, target, A, values)
                    if not check_isotropy_condition(f):
                        continue
                    for a, y in f.pairs():
                        for g, gp in itertools.product(source.group.elements(), repeat=2):
                            if source.act[g, a, a] == source.act[gp, a, a]:
                                assert target.act[g, y, y] == target.act[gp, y, y]

    def test_isotropy_inclusion_implies_star_on_one_orbit(self):
        for (_, source), (_, target) in itertools.product(CORPUS, repeat=2):
            if source.group != target.group or orbit_partition(source).orbit_count != 1:
                continue
            for y in range(target.carrier_size):
                f = PartialEquivariantMap(source, target, subset(source.carrier_size, 0), [y])
                if check_isotropy_condition(f):
                    assert check_star_condition(f)

    def test_isotropy_inclusion_does_not_imply_star(self, transposition_action):
        """With several orbits, transversal points can interact."""
        a = transposition_action
        f = partial(a, a, {0: 0, 1: 0, 2: 1})
        assert check_isotropy_condition(f)
        verdict = check_star_condition(f)
        assert not verdict
        assert verify_star_witness(f, verdict.witness)
