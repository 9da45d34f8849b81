"""The two natural binary actions of a group on itself.

    distributive:  g(g1, g2) = g1 g g1^-1 g2
    conjugate:     g(g1, g2) = g1^-1 g g1 g2

Both always satisfy the binary-action axioms. The first is distributive for
every group; the second need not be. In abelian groups both reduce to
g(g1, g2) = g g2.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from ..group import FiniteGroup
from .binary_action import BinaryAction


class SelfActionFormula(ABC):
    """Abstract base class for formulas of binary actions of a group on itself.

    Attributes
    ----------
    name: str
        Name of the variant. Setting it on a subclass registers the subclass.

    REGISTRY: dict of (str, subclass of SelfActionFormula)

    Interface
    ----------
    Subclasses must implement multiplier(G), returning the (m, m) table
    M[g, g1] such that g(g1, g2) = M[g, g1] g2.
    """

    name: str = None
    REGISTRY: dict[str, type[SelfActionFormula]] = {}

    def __init_subclass__(cls, **kwargs) -> None:
        if (name := cls.name) is not None:
            SelfActionFormula.REGISTRY[name] = cls

    def __str__(self) -> str:
        return f"{self.__class__.__name__}()"

    def __repr__(self) -> str:
        return self.__str__()

    @abstractmethod
    def multiplier(self, G: FiniteGroup) -> np.ndarray:
        """Method to build the table of left multipliers M[g, g1]."""

    def table(self, G: FiniteGroup) -> np.ndarray:
        C = G.cayley
        M = self.multiplier(G)
        elements = np.arange(G.order)
        return C[M[:, :, None], elements[None, None, :]]


class DistributiveFormula(SelfActionFormula):
    name = "distributive"

    def multiplier(self, G: FiniteGroup) -> np.ndarray:
        C, elements = G.cayley, np.arange(G.order)
        g1_g = C[elements[None, :], elements[:, None]]
        return C[g1_g, G.inverse[None, :]]


class ConjugateFormula(SelfActionFormula):
    name = "conjugate"

    def multiplier(self, G: FiniteGroup) -> np.ndarray:
        C, elements = G.cayley, np.arange(G.order)
        inv_g1_g = C[G.inverse[None, :], elements[:, None]]
        return C[inv_g1_g, elements[None, :]]


def canonical_self_action(G: FiniteGroup, variant: str = "distributive") -> BinaryAction:
    """Materializes one of the two self-actions of G as a validated table.

    Raises
    ----------
    ValueError: When the variant is unknown.
    """
    cls = SelfActionFormula.REGISTRY.get(variant)
    if cls is None:
        names = ", ".join(sorted(SelfActionFormula.REGISTRY))
        raise ValueError(f"Unknown self-action variant {variant!r}; expected one of {names}.")
    return BinaryAction(G, G.order, cls().table(G))
