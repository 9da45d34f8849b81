from .binary_action import (
    BinaryAction,
    BinaryOperation,
    action_from_table,
    compose_binary_ops,
    evaluate,
    family_at,
    from_family,
    from_ordinary_action,
    identity_operation,
    inverse_operation,
    operation_of,
    ordinary_action_violation,
    trivial_action,
)
from .distributivity import is_distributive, translation, verify_distributivity_witness
from .self_actions import SelfActionFormula, canonical_self_action
