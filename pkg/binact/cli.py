"""Command-line front end: `python -m binact <command> ...`.

Exit codes: 0 when the command succeeds or the checked property holds, 1 when
it fails or a witness was found, 2 on unreadable or invalid input. Witnesses
are printed as single lines `WITNESS kind=<kind> tuple=(...)`.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .actions import canonical_self_action, is_distributive
from .exceptions import BinactError, Conflict, ParseError, TrialsExhausted, witness_line
from .extension import extend_from_section, extend_structural, isotropy_group
from .named_groups import group_factory
from .orbits import OrbitPartition, SubsetOfCarrier, orbit, orbit_partition, saturate
from .search import SearchConfig, find_nondistributive_witness, find_overlapping_orbits_witness
from .sections import count_transversals, enumerate_transversals
from .serialization import Workspace, action_to_dict, dump_action, dumps

log = logging.getLogger(__name__)

DEFAULT_SECTION_LIMIT = 20

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class _Failed(Exception):
    """Carries the report of a check that did not hold."""

    def __init__(self, lines: list[str]) -> None:
        super().__init__(lines[-1] if lines else "")
        self.lines = lines


def render_dot(p: OrbitPartition) -> str:
    lines = ["graph orbits {"]
    for k, block in enumerate(p.blocks()):
        lines += [f"  subgraph cluster_{k} {{", f'    label="orbit {k}";']
        lines += [f"    {x};" for x in block]
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(p: OrbitPartition, out: str | Path) -> None:
    """Writes the orbit space as a DOT graph, one cluster per orbit."""
    Path(out).write_text(render_dot(p), encoding="utf-8")


def _format_steps(steps: Sequence[tuple[int, int, int, int]]) -> str:
    if not steps:
        return "seed"
    return "; ".join(f"{g}({x1}, {x2}) = {x}" for g, x1, x2, x in steps)


def _conflict_report(e: Conflict) -> list[str]:
    y1, y2 = e.labels
    return [
        f"conflict at point {e.point}: labels {y1} and {y2}",
        f"derivation of {y1}: {_format_steps(e.derivations[0])}",
        f"derivation of {y2}: {_format_steps(e.derivations[1])}",
        e.witness_line(),
    ]


def _subset(ws: Workspace, args: argparse.Namespace, n: int) -> SubsetOfCarrier:
    if args.subset is not None:
        return ws.subset(args.subset, n)
    return SubsetOfCarrier.of(n, args.points)


def _cmd_validate(ws: Workspace, args: argparse.Namespace) -> list[str]:
    try:
        kind, obj = ws.load(args.file)
    except ParseError:
        raise
    except BinactError as e:
        raise _Failed([f"invalid: {e}", e.witness_line()]) from e

    if kind == "group":
        return [f"valid group: order {obj.order}"]
    if kind == "action":
        return [f"valid action: order {obj.group.order}, carrier size {obj.carrier_size}"]
    return [f"valid map: {len(obj.domain)} pairs"]


def _cmd_distributive(ws: Workspace, args: argparse.Namespace) -> list[str]:
    if not (verdict := is_distributive(ws.action(args.action))):
        raise _Failed(["not distributive", witness_line("not-distributive", verdict.witness)])
    return ["distributive"]


def _cmd_orbits(ws: Workspace, args: argparse.Namespace) -> list[str]:
    a = ws.action(args.action)

    if is_distributive(a):
        p = orbit_partition(a)
        return [f"orbit {k}: {block}" for k, block in enumerate(p.blocks())]

    orbits = [orbit(a, x) for x in range(a.carrier_size)]
    lines = [f"orbit of {x}: {o}" for x, o in enumerate(orbits)]
    for x in range(a.carrier_size):
        for y in range(x + 1, a.carrier_size):
            if orbits[x] != orbits[y] and orbits[x].intersection(orbits[y]).members:
                raise _Failed(lines + [witness_line("overlapping-orbits", (x, y))])
    return lines


def _cmd_saturate(ws: Workspace, args: argparse.Namespace) -> list[str]:
    a = ws.action(args.action)
    closure, depth = saturate(a, _subset(ws, args, a.carrier_size))
    return [f"saturation: {closure}", f"depth: {depth}"]


def _cmd_sections(ws: Workspace, args: argparse.Namespace) -> list[str]:
    p = orbit_partition(ws.action(args.action))
    lines = [f"transversals: {count_transversals(p)}"]
    if args.list:
        lines += [str(A) for A in enumerate_transversals(p, args.limit)]
    return lines


def _cmd_isotropy(ws: Workspace, args: argparse.Namespace) -> list[str]:
    H = isotropy_group(ws.action(args.action), args.x, args.xp)
    members = ", ".join(str(g) for g in sorted(H.members))
    return [f"G({args.x}, {args.xp}) = {{{members}}}"]


def _cmd_extend(ws: Workspace, args: argparse.Namespace) -> list[str]:
    f = ws.partial_map(args.map)
    engine = extend_structural if args.engine == "structural" else extend_from_section

    try:
        F = engine(f)
    except Conflict as e:
        raise _Failed(_conflict_report(e)) from e
    except BinactError as e:
        if e.witness is None:
            raise
        raise _Failed([f"extension failed: {e}", e.witness_line()]) from e

    return F.lines()


def _cmd_search(ws: Workspace, args: argparse.Namespace) -> list[str]:
    cfg = SearchConfig(
        seed=args.seed,
        group_spec=args.group,
        carrier_size=args.carrier,
        max_trials=args.max_trials,
        workers=args.workers,
    )

    try:
        if args.kind == "nondistributive":
            a, witness = find_nondistributive_witness(cfg)
            report = witness_line("not-distributive", witness)
        else:
            a, x, y = find_overlapping_orbits_witness(cfg)
            report = witness_line("overlapping-orbits", (x, y))
    except TrialsExhausted:
        return [f"no witness in {cfg.max_trials} trials"]

    if args.output is None:
        raise _Failed([dumps(action_to_dict(a)).rstrip("\n"), report])

    dump_action(a, args.output)
    raise _Failed([report])


def _cmd_gen(ws: Workspace, args: argparse.Namespace) -> list[str]:
    a = canonical_self_action(group_factory(args.group), args.variant)
    return [dumps(action_to_dict(a)).rstrip("\n")]


def _cmd_export_dot(ws: Workspace, args: argparse.Namespace) -> list[str]:
    p = orbit_partition(ws.action(args.action))
    if args.output is not None:
        export_dot(p, args.output)
        return []
    return render_dot(p).splitlines()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binact", description="Finite binary G-spaces.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help)
        sub.add_argument("--output", help="write the result to this file instead of stdout")
        sub.set_defaults(handler=handler)
        return sub

    sub = command("validate", _cmd_validate, "validate a group, action or map file")
    sub.add_argument("file")

    for name, handler, help in (
        ("distributive", _cmd_distributive, "check the distributive law"),
        ("orbits", _cmd_orbits, "list the orbits"),
        ("export-dot", _cmd_export_dot, "write the orbit space as a DOT graph"),
    ):
        command(name, handler, help).add_argument("action")

    sub = command("saturate", _cmd_saturate, "saturate a subset of the carrier")
    sub.add_argument("action")
    sub.add_argument("points", nargs="*", type=int)
    sub.add_argument("--subset", help="JSON list of points")

    sub = command("sections", _cmd_sections, "count or list transversals")
    sub.add_argument("action")
    sub.add_argument("--list", action="store_true")
    sub.add_argument("--limit", type=int, default=DEFAULT_SECTION_LIMIT)

    sub = command("isotropy", _cmd_isotropy, "isotropy group of a pair of points")
    sub.add_argument("action")
    sub.add_argument("x", type=int)
    sub.add_argument("xp", type=int)

    sub = command("extend", _cmd_extend, "extend a partial map")
    sub.add_argument("--map", required=True)
    sub.add_argument("--engine", choices=["structural", "section"], default="structural")

    sub = command("search", _cmd_search, "search for a witness action")
    sub.add_argument("--kind", choices=["nondistributive", "overlapping-orbits"], required=True)
    sub.add_argument("--group", required=True)
    sub.add_argument("--carrier", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--max-trials", type=int, default=100)
    sub.add_argument("--workers", type=int, default=1)

    sub = command("gen", _cmd_gen, "write a canonical self-action of a named group")
    sub.add_argument("--group", required=True)
    sub.add_argument("--variant", choices=["distributive", "conjugate"], default="distributive")

    return parser


def _write(lines: list[str], output: str | None) -> None:
    if not lines:
        return
    text = "\n".join(lines) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _text_output(args: argparse.Namespace) -> str | None:
    # These commands write their artifact to --output themselves.
    return None if args.command in ("search", "export-dot") else args.output


def run(argv: Sequence[str] | None = None) -> int:
    """Parses argv, runs the command and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    log.debug("running %s", args.command)

    try:
        result = args.handler(Workspace(), args)
    except _Failed as e:
        _write(e.lines, _text_output(args))
        return EXIT_FALSE
    except BinactError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.witness is not None:
            print(e.witness_line(), file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    _write(result, _text_output(args))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
