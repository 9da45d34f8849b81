from .maps import (
    IsotropySubgroup,
    PartialEquivariantMap,
    TotalEquivariantMap,
    check_isotropy_condition,
    check_sm1,
    is_biequimorphism,
    is_biequivariant,
    isotropy_group,
    restrict,
)
from .section_extension import check_star_condition, extend_from_section
from .structural import SM2_BUDGET, check_sm2_bounded, extend_structural
