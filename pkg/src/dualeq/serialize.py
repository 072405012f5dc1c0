"""JSON and DOT forms of graphs, and JSON for transform event logs.

Graph JSON lists vertices with their id, signature string, word and
statistic, and edges per color as id pairs.  An edge produced by the
cyclic move carries ``"dt"`` as a third entry.  Output is deterministic,
so export, import and export again gives identical text.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .deg_core import SignedColoredGraph, word_label
from .errors import DomainError
from .shapes_tableaux import parse_signature, signature_str
from .transform import Event


def graph_to_json(g: SignedColoredGraph) -> dict:
    vertices = []
    for v in g.vertices:
        vertices.append(
            {
                "id": g.labels[v],
                "sigma": signature_str(g.sigma[v]),
                "word": list(g.words[v]) if g.words[v] is not None else None,
                "stat": g.stats[v],
            }
        )
    edges = {}
    for i in g.colors:
        rows = []
        for a, b in g.edges(i):
            row: list = [g.labels[a], g.labels[b]]
            kind = g.edge_kinds[i].get((a, b))
            if kind is not None:
                row.append(kind)
            rows.append(row)
        edges[str(i)] = rows
    out = {"n": g.n, "N": g.N, "vertices": vertices, "edges": edges}
    if g.meta:
        out["meta"] = g.meta
    return out


def graph_from_json(data: dict) -> SignedColoredGraph:
    try:
        verts = data["vertices"]
        labels = [str(v["id"]) for v in verts]
        sigma = [parse_signature(v["sigma"]) for v in verts]
        words = [tuple(v["word"]) if v.get("word") is not None else None for v in verts]
        stats = [v.get("stat") for v in verts]
        index = {lab: j for j, lab in enumerate(labels)}
        edges: dict[int, list[tuple[int, int]]] = {}
        kinds: dict[int, dict[tuple[int, int], str]] = {}
        for color, rows in data.get("edges", {}).items():
            i = int(color)
            for row in rows:
                a, b = index[str(row[0])], index[str(row[1])]
                edges.setdefault(i, []).append((a, b))
                if len(row) > 2:
                    kinds.setdefault(i, {})[(min(a, b), max(a, b))] = str(row[2])
        g = SignedColoredGraph(int(data["n"]), int(data["N"]), sigma, edges, labels, words, stats, kinds)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed graph JSON: {exc!r}") from exc
    g.meta = dict(data.get("meta", {}))
    return g


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def dumps_graph(g: SignedColoredGraph) -> str:
    return dumps(graph_to_json(g))


def loads_graph(text: str) -> SignedColoredGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"graph file is not JSON: {exc}") from exc
    return graph_from_json(data)


def events_to_json(events: Iterable[Event]) -> list[dict]:
    return [e.to_json() for e in events]


def events_from_json(data: Sequence[dict]) -> list[Event]:
    return [Event.from_json(d) for d in data]


def _dot_id(label: str) -> str:
    return '"' + label.replace('"', '\\"') + '"'


def to_dot(
    g: SignedColoredGraph,
    vertices: Iterable[int] | None = None,
    words: bool = False,
    name: str = "G",
) -> str:
    """DOT text with one node per vertex labelled by its signature and one
    edge per vertex pair labelled by all colors joining the pair."""
    keep = sorted(set(g.vertices if vertices is None else vertices))
    members = set(keep)
    lines = [f"graph {_dot_id(name)} {{"]
    stats = {g.stats[v] for v in keep}
    if len(stats) == 1 and None not in stats:
        lines.append(f'  label="{g.meta.get("statistic", "stat")} = {stats.pop()}";')
    for v in keep:
        text = signature_str(g.sigma[v])
        if words and g.words[v] is not None:
            text += "\\n" + word_label(g.words[v])
        lines.append(f"  {_dot_id(g.labels[v])} [label={_dot_id(text)}];")
    pairs: dict[tuple[int, int], list[str]] = {}
    for i in g.colors:
        for a, b in g.edges(i):
            if a in members and b in members:
                mark = str(i) + ("̃" if g.edge_kinds[i].get((a, b)) == "dt" else "")
                pairs.setdefault((a, b), []).append(mark)
    for (a, b), marks in sorted(pairs.items()):
        lines.append(f"  {_dot_id(g.labels[a])} -- {_dot_id(g.labels[b])} [label={_dot_id(','.join(marks))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
