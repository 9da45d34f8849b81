from __future__ import annotations

from typing import NamedTuple


class CheckResult(NamedTuple):
    """Outcome of an exhaustive check: whether it holds, and a witness if not.

    The truth value of a CheckResult is the truth value of the check itself,
    so it can be used directly in conditions.
    """

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def from_witness(cls, witness: tuple | None) -> CheckResult:
        return cls(holds=witness is None, witness=witness)
