"""Extension of a map given on a transversal of a distributive action.

When the source action is distributive, every point x lies in G(a, a) for
the unique point a of a transversal A in its orbit, so

    F(x) = g(f(a), f(a))   for any g with g(a, a) = x

is the only candidate extension. It is well defined and bi-equivariant for
a distributive target exactly when f satisfies the star condition: for all
g, h, k, s in G and a, a', a'' in A,

    g(a, a) = h(k(a', a'), s(a'', a''))
        implies  g(f(a), f(a)) = h(k(f(a'), f(a')), s(f(a''), f(a''))).
"""

from __future__ import annotations

import logging

import numpy as np

from ..actions import is_distributive
from ..exceptions import NoRepresentation, NotDistributive, StarConditionFailed
from ..orbits import SubsetOfCarrier, orbit_partition
from ..sections import CrossSection, section_from_transversal
from ..utils import CheckResult, as_witness
from ..utils.table_kernels import star_condition_witness
from .maps import PartialEquivariantMap, TotalEquivariantMap, is_biequivariant

log = logging.getLogger(__name__)


def _section_of(f: PartialEquivariantMap, A: SubsetOfCarrier | None) -> CrossSection:
    if A is not None and A != f.domain:
        raise ValueError(f"The transversal {A} is not the domain {f.domain} of the map.")

    return section_from_transversal(orbit_partition(f.source), f.domain)


def check_star_condition(f: PartialEquivariantMap, A: SubsetOfCarrier | None = None) -> CheckResult:
    """Checks the star condition on the domain of f, which must be a transversal.

    The witness is the first failing (g, h, k, s, a, a', a'').

    Raises
    ----------
    ValueError: When A is given and differs from the domain of f.

    NotDistributive: When the source action is not distributive.

    NotATransversal: When the domain of f is not a transversal.
    """
    _section_of(f, A)

    witness = star_condition_witness(
        f.source.act, f.target.act, f.domain.indices(), f.full_values()
    )
    return CheckResult.from_witness(as_witness(witness))


def extend_from_section(
    f: PartialEquivariantMap, A: SubsetOfCarrier | None = None
) -> TotalEquivariantMap:
    """Extends f from a transversal to the whole source carrier.

    Each x is represented as g(a, a) with a the transversal point in its
    orbit and g the smallest element doing so.

    Raises
    ----------
    StarConditionFailed: When f fails the star condition. Witness (g, h, k, s, a, a', a'').

    NotDistributive: When the source or the target is not distributive.

    NotATransversal: When the domain of f is not a transversal.

    NoRepresentation: When no g with g(a, a) = x exists. Witness (x, a).
    """
    section = _section_of(f, A)

    if not (verdict := check_star_condition(f)):
        msg = f"The star condition fails at {verdict.witness}."
        raise StarConditionFailed(msg, witness=verdict.witness)

    if not (verdict := is_distributive(f.target)):
        msg = "Extension from a section needs a distributive target."
        raise NotDistributive(msg, witness=verdict.witness)

    src, tgt = f.source.act, f.target.act
    orbit_of = section.partition.orbit_of
    labels = f.full_values()
    values = np.empty(f.source.carrier_size, dtype=np.int64)

    for x in range(f.source.carrier_size):
        a = section.chosen[orbit_of[x]]
        candidates = np.flatnonzero(src[:, a, a] == x)
        if candidates.size == 0:
            raise NoRepresentation(f"No g satisfies g({a}, {a}) = {x}.", witness=(x, a))
        g = int(candidates[0])
        values[x] = tgt[g, labels[a], labels[a]]
        log.debug("F(%d) = %d(f(%d), f(%d)) = %d", x, g, a, a, values[x])

    F = TotalEquivariantMap(f.source, f.target, values)

    if not (verdict := is_biequivariant(F)):
        raise RuntimeError(f"Extension from a section is not bi-equivariant at {verdict.witness}.")

    return F
