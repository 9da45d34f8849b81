"""Finite binary transformation groups: binary actions of finite groups on
finite carriers, their orbits, and the extension of partial bi-equivariant maps.
"""

from .actions import (
    BinaryAction,
    BinaryOperation,
    action_from_table,
    canonical_self_action,
    compose_binary_ops,
    evaluate,
    family_at,
    from_family,
    from_ordinary_action,
    identity_operation,
    inverse_operation,
    is_distributive,
    operation_of,
    ordinary_action_violation,
    translation,
    trivial_action,
)
from .extension import (
    IsotropySubgroup,
    PartialEquivariantMap,
    TotalEquivariantMap,
    check_isotropy_condition,
    check_sm1,
    check_sm2_bounded,
    check_star_condition,
    extend_from_section,
    extend_structural,
    is_biequimorphism,
    is_biequivariant,
    isotropy_group,
    restrict,
)
from .group import FiniteGroup, conjugate_subgroup, group_from_table, inverse, is_subgroup
from .named_groups import group_factory
from .orbits import (
    OrbitPartition,
    SubsetOfCarrier,
    apply_set,
    induced_subaction,
    is_bi_invariant,
    orbit,
    orbit_partition,
    point_orbit_set,
    project,
    saturate,
)
from .search import (
    SearchConfig,
    find_nondistributive_witness,
    find_overlapping_orbits_witness,
    overlapping_orbits,
    random_binary_action,
    random_distributive_action,
)
from .sections import (
    CrossSection,
    count_transversals,
    enumerate_transversals,
    is_transversal,
    section_from_transversal,
)
