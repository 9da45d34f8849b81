"""Extension of a partial map over the saturation of its domain.

A map f: A -> Y extends to a bi-equivariant map on the saturation of A
exactly when it is a structural map:

    (1) f(g(a1, a2)) = g(f(a1), f(a2)) whenever g(a1, a2) lies in A, and
    (2) any two bracket expressions over A with equal values in X have equal
        values once every leaf a is replaced by f(a).

The extension is then unique. Condition (1) is checked directly. Condition
(2) quantifies over unboundedly deep brackets, so extend_structural checks it
operationally: labels spread from A through every pair of labeled points and
any point reached with two labels is a violation. check_sm2_bounded
enumerates the bracket values themselves and serves as an independent oracle.
"""

from __future__ import annotations

import logging
from collections import deque

import numpy as np

from ..exceptions import BudgetExceeded, Conflict, EmptyInput, Sm1Violation
from ..orbits import SubsetOfCarrier
from ..utils import CheckResult
from .maps import PartialEquivariantMap, TotalEquivariantMap, check_sm1, is_biequivariant

log = logging.getLogger(__name__)

SM2_BUDGET = 10_000_000

Step = tuple[int, int, int, int]


def _derivation(x: int, origin: dict[int, tuple[int, int, int]]) -> tuple[Step, ...]:
    steps: list[Step] = []
    done: set[int] = set()
    stack = [(x, False)]

    while stack:
        z, expanded = stack.pop()
        if z in done or z not in origin:
            continue
        g, z1, z2 = origin[z]
        if expanded:
            done.add(z)
            steps.append((g, z1, z2, z))
        else:
            stack += [(z, True), (z2, False), (z1, False)]

    return tuple(steps)


def extend_structural(f: PartialEquivariantMap) -> TotalEquivariantMap:
    """Extends f to the unique bi-equivariant map on the saturation of its domain.

    Starting from the pairs (a, f(a)), whenever x and x' carry labels y and y',
    the point g(x, x') receives the label g(y, y') for every g. Every pair of
    labeled points is combined, in both orders, so the labeled set ends up
    being the saturation of A.

    Raises
    ----------
    EmptyInput: When f has an empty domain.

    Sm1Violation: When f fails condition (1). Witness (g, a1, a2).

    Conflict: When a point receives two different labels, i.e. f fails
    condition (2). Carries the point, both labels and both derivations.
    """
    if not f.domain.members:
        raise EmptyInput("Cannot extend a map with an empty domain.")

    if not (verdict := check_sm1(f)):
        g, a1, a2 = verdict.witness
        msg = f"f({g}({a1}, {a2})) differs from {g}(f({a1}), f({a2}))."
        raise Sm1Violation(msg, witness=verdict.witness)

    src, tgt = f.source.act, f.target.act
    order = f.source.group.order

    labels = f.full_values()
    origin: dict[int, tuple[int, int, int]] = {}
    labeled = list(f.domain)
    queue = deque(labeled)

    while queue:
        p = queue.popleft()
        # Points labeled later pair with p when they are popped themselves.
        for q in list(labeled):
            for x1, x2 in ((p, q), (q, p)):
                y1, y2 = labels[x1], labels[x2]
                for g in range(order):
                    x, y = int(src[g, x1, x2]), int(tgt[g, y1, y2])
                    if labels[x] == -1:
                        labels[x] = y
                        origin[x] = (g, x1, x2)
                        labeled.append(x)
                        queue.append(x)
                    elif labels[x] != y:
                        existing = _derivation(x, origin)
                        competing = _derivation(x1, origin) + _derivation(x2, origin)
                        competing = tuple(dict.fromkeys(competing)) + ((g, x1, x2, x),)
                        msg = f"Point {x} is labeled both {labels[x]} and {y}."
                        raise Conflict(msg, x, (int(labels[x]), y), (existing, competing))

    log.debug("propagation labeled %d of %d points", len(labeled), f.source.carrier_size)

    domain = SubsetOfCarrier.of(f.source.carrier_size, labeled)
    F = TotalEquivariantMap(f.source, f.target, labels, domain=domain)

    # Every pair of labeled points was combined without conflict.
    if not (verdict := is_biequivariant(F)):
        raise RuntimeError(f"Propagated map is not bi-equivariant at {verdict.witness}.")

    return F


def check_sm2_bounded(
    f: PartialEquivariantMap, max_depth: int, budget: int = SM2_BUDGET
) -> CheckResult:
    """Compares bracket expressions over the domain of f up to nesting depth max_depth.

    Level 0 holds the pairs (a, f(a)). Level d holds (g(x1, x2), g(y1, y2))
    for every g and every two pairs of level d - 1; it contains level d - 1
    through g = e, so it holds the values of all brackets of depth at most d.
    The check fails when one value in X comes with two values in Y. Brackets
    with equal value pairs are kept once.

    The witness is (depth, x, y1, y2) for the first level showing a conflict.

    Raises
    ----------
    ValueError: When max_depth < 1.

    BudgetExceeded: When more than budget evaluations would be needed.
    Witness (depth, evaluations).
    """
    if max_depth < 1:
        raise ValueError(f"The depth must be at least 1 but got {max_depth}.")

    src, tgt = f.source.act, f.target.act
    order, ny = f.source.group.order, f.target.carrier_size

    xs = f.domain.indices()
    ys = np.array(f.values, dtype=np.int64)
    evaluations = 0

    for depth in range(1, max_depth + 1):
        evaluations += order * xs.size * xs.size
        if evaluations > budget:
            msg = f"Depth {depth} needs {evaluations} evaluations, more than {budget}."
            raise BudgetExceeded(msg, witness=(depth, evaluations))

        new_x = src[:, xs[:, None], xs[None, :]].ravel()
        new_y = tgt[:, ys[:, None], ys[None, :]].ravel()
        codes = np.unique(new_x * ny + new_y)
        log.debug("bracket level %d: %d value pairs", depth, codes.size)

        values_x, values_y = codes // ny, codes % ny
        clash = np.flatnonzero(values_x[1:] == values_x[:-1])
        if clash.size:
            i = int(clash[0])
            witness = (depth, int(values_x[i]), int(values_y[i]), int(values_y[i + 1]))
            return CheckResult.from_witness(witness)

        if codes.size == xs.size:
            break
        xs, ys = values_x, values_y

    return CheckResult.from_witness(None)
