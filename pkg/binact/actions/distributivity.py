"""Distributivity of binary actions.

An action is distributive when g(h(x, x1), h(x, x2)) = h(x, g(x1, x2)) for
all g, h, x, x1, x2. Equivalently, every translation x2 -> h(x, x2) is a
bi-equivariant bijection of the carrier onto itself.
"""

from __future__ import annotations

import numpy as np

from ..utils import CheckResult, as_witness
from ..utils.table_kernels import distributivity_witness
from .binary_action import BinaryAction


def is_distributive(a: BinaryAction) -> CheckResult:
    """Checks the distributive law exhaustively.

    The witness, if any, is the lexicographically first (g, h, x, x1, x2).
    """
    return CheckResult.from_witness(as_witness(distributivity_witness(a.act)))


def verify_distributivity_witness(a: BinaryAction, witness: tuple[int, ...]) -> bool:
    """Re-evaluates a claimed failure of the distributive law directly."""
    g, h, x, x1, x2 = witness
    ev = a.evaluate
    return ev(g, ev(h, x, x1), ev(h, x, x2)) != ev(h, x, ev(g, x1, x2))


def translation(a: BinaryAction, h: int, x: int) -> np.ndarray:
    """The bijection x2 -> h(x, x2) of the carrier."""
    return a.act[a.group.check_element(h), a.check_point(x)].copy()
