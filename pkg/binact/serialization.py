"""JSON formats for groups, actions, subsets and partial maps.

    group   {"order": m, "table": [[...], ...]}
    action  {"group": <group object, group file path or group spec>,
             "carrier_size": n, "act": [[[...]]]}
    subset  [x, ...]
    map     {"source": <action file path>, "target": <action file path>,
             "pairs": [[a, y], ...]}

Relative paths inside a file are resolved against the directory of that
file. Every loaded object goes through its validating constructor.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from collections.abc import Callable
from typing import Any, TypeVar

from .actions import BinaryAction
from .exceptions import ParseError
from .extension import PartialEquivariantMap
from .group import FiniteGroup
from .named_groups import group_factory
from .orbits import SubsetOfCarrier

log = logging.getLogger(__name__)

PathLike = str | Path
T = TypeVar("T")

_INT64 = range(-(1 << 63), 1 << 63)


def _read_json(path: PathLike) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e.msg} at line {e.lineno}.") from e


def _field(obj: Any, key: str, path: PathLike) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{path} has no field {key!r}.")
    return obj[key]


def _check_ints(obj: Any, depth: int, path: PathLike, what: str) -> None:
    """Checks that obj is a list nested depth levels deep with int leaves."""
    if depth == 0:
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ParseError(f"{path}: the {what} holds {obj!r}, which is not an integer.")
        if obj not in _INT64:
            raise ParseError(f"{path}: the {what} holds {obj}, which does not fit in 64 bits.")
        return

    if not isinstance(obj, list):
        raise ParseError(f"{path}: the {what} is not a list nested {depth} levels deep.")
    for item in obj:
        _check_ints(item, depth - 1, path, what)


def _build(path: PathLike, constructor: Callable[..., T], *args: Any) -> T:
    try:
        return constructor(*args)
    except (TypeError, OverflowError) as e:
        raise ParseError(f"{path}: {e}") from e


def dumps(obj: Any) -> str:
    return json.dumps(obj) + "\n"


def detect_kind(obj: Any) -> str:
    """Names the format of a decoded JSON document: group, action, map or subset."""
    if isinstance(obj, list):
        return "subset"
    if isinstance(obj, dict):
        if "act" in obj:
            return "action"
        if "pairs" in obj:
            return "map"
        if "table" in obj:
            return "group"
    raise ParseError("The document is not a group, action, subset or map.")


def group_to_dict(G: FiniteGroup) -> dict[str, Any]:
    return {"order": G.order, "table": G.to_table()}


def group_from_dict(obj: Any, path: PathLike = "<group>") -> FiniteGroup:
    table = _field(obj, "table", path)
    _check_ints(table, 2, path, "group table")
    if "order" in obj:
        _check_ints(obj["order"], 0, path, "group order")
        if obj["order"] != len(table):
            raise ParseError(f"{path} declares order {obj['order']} for a table of {len(table)} rows.")
    return _build(path, FiniteGroup, table)


def action_to_dict(a: BinaryAction) -> dict[str, Any]:
    return {"group": group_to_dict(a.group), "carrier_size": a.carrier_size, "act": a.to_table()}


def map_to_dict(f: PartialEquivariantMap, source: PathLike, target: PathLike) -> dict[str, Any]:
    return {"source": str(source), "target": str(target), "pairs": [list(p) for p in f.pairs()]}


class Workspace:
    """Loads files once per resolved path and keeps the validated objects.

    Attributes
    ----------
    groups, actions, subsets, maps: dict of (Path, object)
    """

    def __init__(self) -> None:
        self.groups: dict[Path, FiniteGroup] = {}
        self.actions: dict[Path, BinaryAction] = {}
        self.subsets: dict[tuple[Path, int], SubsetOfCarrier] = {}
        self.maps: dict[Path, PartialEquivariantMap] = {}

    def __str__(self) -> str:
        loaded = len(self.groups) + len(self.actions) + len(self.subsets) + len(self.maps)
        return f"{self.__class__.__name__}(loaded={loaded})"

    def __repr__(self) -> str:
        return self.__str__()

    def group(self, path: PathLike) -> FiniteGroup:
        key = Path(path).resolve()
        if key not in self.groups:
            log.debug("loading group %s", key)
            self.groups[key] = group_from_dict(_read_json(key), key)
        return self.groups[key]

    def resolve_group(self, ref: Any, base: Path) -> FiniteGroup:
        """A group given inline, as a file relative to base, or as a named spec."""
        if isinstance(ref, dict):
            return group_from_dict(ref, base)
        if not isinstance(ref, str):
            raise ParseError(f"Cannot read a group from {ref!r}.")
        if ref.endswith(".json") or (base / ref).is_file():
            return self.group(base / ref)
        return group_factory(ref)

    def action(self, path: PathLike) -> BinaryAction:
        key = Path(path).resolve()
        if key not in self.actions:
            log.debug("loading action %s", key)
            obj = _read_json(key)
            G = self.resolve_group(_field(obj, "group", key), key.parent)
            n = _field(obj, "carrier_size", key)
            _check_ints(n, 0, key, "carrier size")
            act = _field(obj, "act", key)
            _check_ints(act, 3, key, "action table")
            self.actions[key] = _build(key, BinaryAction, G, n, act)
        return self.actions[key]

    def subset(self, path: PathLike, carrier_size: int) -> SubsetOfCarrier:
        key = (Path(path).resolve(), carrier_size)
        if key not in self.subsets:
            obj = _read_json(key[0])
            _check_ints(obj, 1, key[0], "subset")
            self.subsets[key] = _build(key[0], SubsetOfCarrier.of, carrier_size, obj)
        return self.subsets[key]

    def partial_map(self, path: PathLike) -> PartialEquivariantMap:
        key = Path(path).resolve()
        if key not in self.maps:
            log.debug("loading map %s", key)
            obj = _read_json(key)
            refs = [_field(obj, field, key) for field in ("source", "target")]
            if not all(isinstance(ref, str) for ref in refs):
                raise ParseError(f"{key} must name its source and target as file paths.")
            source, target = (self.action(key.parent / ref) for ref in refs)
            pairs = _field(obj, "pairs", key)
            _check_ints(pairs, 2, key, "pair list")
            if not all(len(p) == 2 for p in pairs):
                raise ParseError(f"{key} has malformed pairs; expected [a, y] lists.")
            self.maps[key] = _build(key, PartialEquivariantMap.from_pairs, source, target, pairs)
        return self.maps[key]

    def load(self, path: PathLike) -> tuple[str, Any]:
        """Loads a file of any of the formats, detecting which one it is."""
        kind = detect_kind(_read_json(path))
        if kind == "group":
            return kind, self.group(path)
        if kind == "action":
            return kind, self.action(path)
        if kind == "map":
            return kind, self.partial_map(path)
        raise ParseError(f"{path} holds a bare subset, which needs an action to be validated.")


def load_group(path: PathLike) -> FiniteGroup:
    return Workspace().group(path)


def load_action(path: PathLike) -> BinaryAction:
    return Workspace().action(path)


def load_map(path: PathLike) -> PartialEquivariantMap:
    return Workspace().partial_map(path)


def dump_action(a: BinaryAction, path: PathLike) -> None:
    Path(path).write_text(dumps(action_to_dict(a)), encoding="utf-8")


def dump_group(G: FiniteGroup, path: PathLike) -> None:
    Path(path).write_text(dumps(group_to_dict(G)), encoding="utf-8")
