"""Command-line front end.

    dualeq llt --shapes "2;1,1" --k 2
    dualeq macdonald --mu 2,1
    dualeq deg build --partition 3,2 --export-dot
    dualeq deg check --in graph.json
    dualeq deg transform --in graph.json --log events.json
    dualeq deg components --in graph.json
    dualeq deg export-dot --in graph.json --component 0

Exit codes: 0 ok, 1 usage or domain error, 2 not Schur positive,
3 transform failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import fixtures
from .axioms import check_axioms
from .deg_core import SignedColoredGraph, build_standard_deg, component_shape, connected_components
from .errors import DomainError, NotSchurPositive, ResourceError, TransformFailed
from .llt import build_llt_graph, llt_schur
from .macdonald import DEFAULT_MAX_SIZE as MACDONALD_MAX_SIZE
from .macdonald import kostka_macdonald
from .serialize import dumps, dumps_graph, events_to_json, loads_graph, to_dot
from .shapes_tableaux import DEFAULT_MAX_SIZE as LLT_MAX_SIZE
from .shapes_tableaux import Partition, parse_tuple_shape
from .symfunc import SchurPoly
from .transform import transform_to_deg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_POSITIVE = 2
EXIT_TRANSFORM = 3

METHODS = ("oracle", "transform", "both")
FORMATS = ("text", "json", "dot")

FIXTURES: dict[str, Callable[[], SignedColoredGraph]] = {
    "box": fixtures.box_graph,
    "box-repaired": fixtures.box_graph_repaired,
    "frog": fixtures.frog_graph,
    "frog-repaired": fixtures.frog_graph_repaired,
    "double-cover": fixtures.double_cover_graph,
    "domino": fixtures.domino_graph,
    "non-standard": fixtures.non_standard_graph,
    "fails-4c": fixtures.fails_4c_graph,
    "fails-4b": fixtures.fails_4b_graph,
}


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by the commands.  There is no randomness anywhere,
    so equal configs give byte-identical output."""

    command: str
    shapes: tuple[str, ...] = ()
    k: int | None = None
    method: str = "oracle"
    max_size: int = LLT_MAX_SIZE
    output_format: str = "text"
    jobs: int = 1
    allow_fallback: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.max_size < 1:
            raise DomainError("--max-size must be positive")
        if self.jobs < 1:
            raise DomainError("--jobs must be positive")
        if self.method not in METHODS:
            raise DomainError(f"method must be one of {', '.join(METHODS)}")
        if self.output_format not in FORMATS:
            raise DomainError(f"format must be one of {', '.join(FORMATS)}")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> Partition:
    try:
        return Partition.of([int(x) for x in text.split(",") if x.strip()])
    except ValueError as exc:
        raise DomainError(f"bad partition {text!r}") from exc


def _ordered_map(fn: Callable, items: Sequence, jobs: int) -> list:
    """``map`` with an optional thread pool; results keep input order."""
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_graph(path: str) -> SignedColoredGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads_graph(fh.read())
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from exc


# llt


def cmd_llt(config: RunConfig) -> str:
    def one(text: str) -> tuple[str, SchurPoly]:
        shape = parse_tuple_shape(text)
        return text, llt_schur(shape, config.k, config.method, config.allow_fallback, config.max_size)

    results = _ordered_map(one, list(config.shapes), config.jobs)
    for _, expansion in results:
        for w in expansion.warnings:
            print(f"warning: {w}", file=sys.stderr)
    if config.output_format == "json":
        payload = [
            {
                "shapes": text,
                "k": config.k if config.k is not None else parse_tuple_shape(text).k,
                "method": config.method,
                "text": expansion.render(),
                "expansion": expansion.to_json(),
                "warnings": list(expansion.warnings),
            }
            for text, expansion in results
        ]
        return dumps(payload[0] if len(payload) == 1 else payload)
    return "".join(expansion.render() + "\n" for _, expansion in results)


# macdonald


def cmd_macdonald(config: RunConfig) -> str:
    mus = [_partition(text) for text in config.shapes]
    results = _ordered_map(lambda mu: kostka_macdonald(mu, config.max_size), mus, config.jobs)
    if config.output_format == "json":
        payload = [
            {"mu": list(mu.parts), "text": table.render(), "expansion": table.to_json()}
            for mu, table in zip(mus, results)
        ]
        return dumps(payload[0] if len(payload) == 1 else payload)
    lines = []
    for mu, table in zip(mus, results):
        if len(mus) > 1:
            lines.append(f"mu = {','.join(map(str, mu.parts))}")
        for lam, c in table.terms.items():
            lines.append(f"s[{','.join(map(str, lam.parts))}]: {c}")
    return "".join(line + "\n" for line in lines)


# deg


def _build(args: argparse.Namespace) -> SignedColoredGraph:
    chosen = [x for x in (args.partition, args.shapes, args.fixture) if x is not None]
    if len(chosen) != 1:
        raise DomainError("give exactly one of --partition, --shapes, --fixture")
    if args.partition is not None:
        return build_standard_deg(_partition(args.partition))
    if args.shapes is not None:
        return build_llt_graph(parse_tuple_shape(args.shapes), args.k, args.max_size)
    return FIXTURES[args.fixture]()


def _components_table(g: SignedColoredGraph) -> list[dict]:
    rows = []
    for j, comp in enumerate(connected_components(g, g.colors)):
        lam = component_shape(g, comp)
        rows.append(
            {
                "index": j,
                "size": len(comp),
                "shape": list(lam.parts) if lam is not None else None,
                "stat": sorted({g.stats[v] for v in comp if g.stats[v] is not None}),
                "first": g.labels[comp[0]],
            }
        )
    return rows


def cmd_deg(args: argparse.Namespace) -> int:
    sub = args.deg_command
    if sub == "build":
        g = _build(args)
        text = to_dot(g, words=args.words) if args.export_dot or args.format == "dot" else dumps_graph(g)
        _write(text, args.out)
        return EXIT_OK
    g = _read_graph(args.input)
    if sub == "check":
        report = check_axioms(g)
        if args.format == "json":
            _write(dumps(report.to_json()), None)
        else:
            _write("".join(line + "\n" for line in report.lines()), None)
        return EXIT_OK
    if sub == "transform":
        try:
            result = transform_to_deg(g)
        except TransformFailed as exc:
            print(f"error: transform failed: {exc}", file=sys.stderr)
            if args.log is not None:
                _write(dumps(events_to_json(exc.events)), args.log)
            return EXIT_TRANSFORM
        for note in result.notes:
            print(f"note: {note}", file=sys.stderr)
        if args.log is not None:
            _write(dumps(events_to_json(result.events)), args.log)
        _write(dumps_graph(result.graph), args.out)
        return EXIT_OK
    if sub == "components":
        rows = _components_table(g)
        if args.format == "json":
            _write(dumps(rows), None)
        else:
            lines = []
            for row in rows:
                shape = ",".join(map(str, row["shape"])) if row["shape"] is not None else "-"
                stat = ",".join(map(str, row["stat"])) or "-"
                lines.append(f"{row['index']}\tsize={row['size']}\tshape={shape}\tstat={stat}\tfirst={row['first']}")
            _write("".join(line + "\n" for line in lines), None)
        return EXIT_OK
    if sub == "export-dot":
        comps = connected_components(g, g.colors)
        vertices = None
        if args.component is not None:
            if not 0 <= args.component < len(comps):
                raise DomainError(f"component index {args.component} out of range 0..{len(comps) - 1}")
            vertices = comps[args.component]
        _write(to_dot(g, vertices, words=args.words), args.out)
        return EXIT_OK
    raise DomainError(f"unknown deg command {sub!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualeq", description="LLT and Macdonald Schur expansions via dual equivalence graphs.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    llt = commands.add_parser("llt", help="Schur expansion of an LLT polynomial")
    llt.add_argument("--shapes", action="append", required=True, help='tuple shape such as "2;1,1"; repeatable')
    llt.add_argument("--k", type=int, default=None, help="defaults to the number of shapes")
    llt.add_argument("--method", choices=METHODS, default="oracle")
    llt.add_argument("--format", choices=("text", "json"), default="text")
    llt.add_argument("--max-size", type=int, default=LLT_MAX_SIZE)
    llt.add_argument("--no-fallback", action="store_true", help="exit 3 instead of using the oracle")
    llt.add_argument("--jobs", type=int, default=1, help="worker threads for repeated --shapes")

    mac = commands.add_parser("macdonald", help="Schur coefficients of a transformed Macdonald polynomial")
    mac.add_argument("--mu", action="append", required=True, help="partition such as 2,1; repeatable")
    mac.add_argument("--format", choices=("text", "json"), default="text")
    mac.add_argument("--max-size", type=int, default=MACDONALD_MAX_SIZE)
    mac.add_argument("--jobs", type=int, default=1)

    deg = commands.add_parser("deg", help="build, check and transform signed colored graphs")
    deg_commands = deg.add_subparsers(dest="deg_command", required=True, parser_class=_Parser)

    build = deg_commands.add_parser("build", help="standard graph, LLT graph or stored fixture")
    build.add_argument("--partition")
    build.add_argument("--shapes")
    build.add_argument("--k", type=int, default=None)
    build.add_argument("--fixture", choices=sorted(FIXTURES))
    build.add_argument("--max-size", type=int, default=LLT_MAX_SIZE)
    build.add_argument("--export-dot", action="store_true")
    build.add_argument("--format", choices=("json", "dot"), default="json")
    build.add_argument("--words", action="store_true", help="show words in DOT labels")
    build.add_argument("--out")

    check = deg_commands.add_parser("check", help="axiom report")
    check.add_argument("--in", dest="input", required=True)
    check.add_argument("--format", choices=("text", "json"), default="text")

    transform = deg_commands.add_parser("transform", help="rewire a D graph into a dual equivalence graph")
    transform.add_argument("--in", dest="input", required=True)
    transform.add_argument("--log", help="write the event log here")
    transform.add_argument("--out")

    comps = deg_commands.add_parser("components", help="list components with shape and statistic")
    comps.add_argument("--in", dest="input", required=True)
    comps.add_argument("--format", choices=("text", "json"), default="text")

    dot = deg_commands.add_parser("export-dot", help="DOT text for the graph or one component")
    dot.add_argument("--in", dest="input", required=True)
    dot.add_argument("--component", type=int)
    dot.add_argument("--words", action="store_true")
    dot.add_argument("--out")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    if args.command == "llt":
        return RunConfig(
            "llt",
            tuple(args.shapes),
            args.k,
            args.method,
            args.max_size,
            args.format,
            args.jobs,
            not args.no_fallback,
        )
    return RunConfig("macdonald", tuple(args.mu), None, "oracle", args.max_size, args.format, args.jobs)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "deg":
            return cmd_deg(args)
        config = _config(args)
        run = cmd_llt if config.command == "llt" else cmd_macdonald
        _write(run(config), None)
        return EXIT_OK
    except NotSchurPositive as exc:
        print(f"error: not Schur positive: {exc}", file=sys.stderr)
        return EXIT_NOT_POSITIVE
    except TransformFailed as exc:
        print(f"error: transform failed: {exc}", file=sys.stderr)
        return EXIT_TRANSFORM
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
