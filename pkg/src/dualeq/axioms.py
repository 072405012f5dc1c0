"""Verdicts for the dual equivalence axioms, the weaker local axioms used
by the transform, and local Schur positivity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .deg_core import (
    SignedColoredGraph,
    connected_components,
    describe_vertex,
    i_type,
    match_vertices,
    standard_graph,
)
from .errors import NotSchurPositive
from .poly import ONE
from .shapes_tableaux import Signature, partitions
from .symfunc import QSymAggregate, extract_schur

AXIOMS = ("1", "2", "3", "4", "5", "6", "4'a", "4'b", "4'c", "LSP")
BASIC = ("1", "2", "3", "5")
D_GRAPH = ("1", "2", "3", "5", "4'a", "4'b", "4'c", "LSP")


@dataclass
class AxiomReport:
    """Per-axiom verdicts with a witness for each failure."""

    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def holds(self, name: str) -> bool:
        return self.verdicts[name]

    def passes(self, names: Iterable[str] | None = None) -> bool:
        names = self.verdicts if names is None else names
        return all(self.verdicts[a] for a in names if a in self.verdicts)

    def failed(self) -> list[str]:
        return [a for a, ok in self.verdicts.items() if not ok]

    def lines(self) -> list[str]:
        out = []
        for a in self.verdicts:
            tail = f"  {self.witnesses[a]}" if a in self.witnesses else ""
            out.append(f"axiom {a}: {'holds' if self.verdicts[a] else 'fails'}{tail}")
        out.extend(f"note: {n}" for n in self.notes)
        return out

    def to_json(self) -> dict:
        return {
            "verdicts": dict(self.verdicts),
            "witnesses": dict(self.witnesses),
            "notes": list(self.notes),
        }


def check_axioms(g: SignedColoredGraph, which: Sequence[str] = AXIOMS) -> AxiomReport:
    report = AxiomReport()
    checks = {
        "1": check_ax1,
        "2": check_ax2,
        "3": check_ax3,
        "4": check_ax4,
        "5": check_ax5,
        "6": check_ax6,
        "4'a": check_ax4a,
        "4'b": check_ax4b,
        "4'c": lambda graph: check_ax4c(graph, report.notes),
        "LSP": check_lsp,
    }
    for name in AXIOMS:
        if name in which:
            witness = checks[name](g)
            report.verdicts[name] = witness is None
            if witness is not None:
                report.witnesses[name] = witness
    return report


def check_ax1(g: SignedColoredGraph) -> str | None:
    """E_i is a perfect matching on exactly the vertices admitting an i-neighbor."""
    for i in g.colors:
        for v in g.vertices:
            count = len(g.neighbors(i, v))
            want = 1 if g.admits(v, i) else 0
            if count != want:
                return f"color {i} at {describe_vertex(g, v)} has {count} neighbors, expected {want}"
    return None


def check_ax2(g: SignedColoredGraph) -> str | None:
    for i in g.colors:
        for w, x in g.edges(i):
            sw, sx = g.sigma[w], g.sigma[x]
            for j in range(1, g.N):
                flips = sw[j - 1] != sx[j - 1]
                if j in (i - 1, i) and not flips:
                    return f"color {i} edge {describe_vertex(g, w)}-{describe_vertex(g, x)} keeps position {j}"
                if (j < i - 2 or j > i + 1) and flips:
                    return f"color {i} edge {describe_vertex(g, w)}-{describe_vertex(g, x)} changes position {j}"
    return None


def check_ax3(g: SignedColoredGraph) -> str | None:
    for i in g.colors:
        for a, b in g.edges(i):
            for w, x in ((a, b), (b, a)):
                if i - 2 >= 1 and g.s(w, i - 2) == -g.s(x, i - 2) and g.s(w, i - 2) != -g.s(w, i - 1):
                    return f"color {i} edge {describe_vertex(g, w)}-{describe_vertex(g, x)} at position {i - 2}"
                if i + 1 <= g.N - 1 and g.s(w, i + 1) == -g.s(x, i + 1) and g.s(w, i + 1) != -g.s(w, i):
                    return f"color {i} edge {describe_vertex(g, w)}-{describe_vertex(g, x)} at position {i + 1}"
    return None


def check_ax5(g: SignedColoredGraph) -> str | None:
    for i in g.colors:
        for a, b in g.edges(i):
            for w, x in ((a, b), (b, a)):
                for j in g.colors:
                    if abs(i - j) < 3:
                        continue
                    for y in g.neighbors(j, x):
                        v = g.E(j, w)
                        if v == w or y not in g.neighbors(i, v):
                            return (
                                f"colors {i},{j} at {describe_vertex(g, w)}-{describe_vertex(g, x)}"
                                f"-{describe_vertex(g, y)} do not close a square"
                            )
    return None


@lru_cache(maxsize=None)
def _templates(size: int) -> list[SignedColoredGraph]:
    return [standard_graph(lam.parts) for lam in partitions(size)]


def _local_components(g: SignedColoredGraph, i: int, width: int) -> list[list[int]]:
    return connected_components(g, range(i - width + 1, i + 1))


def _window(g: SignedColoredGraph, lo: int, hi: int):
    return lambda v: g.sigma[v][lo - 1 : hi]


def check_ax4(g: SignedColoredGraph) -> str | None:
    """Local components match standard graphs of size 4 and 5."""
    for i in range(3, g.n):
        witness = ax4_violation(g, i)
        if witness is not None:
            return witness
    return None


def ax4_violation(g: SignedColoredGraph, i: int) -> str | None:
    """The local template check for the windows whose top color is i."""
    for width, size in ((2, 4), (3, 5)):
        if i < width + 1 or i >= g.n:
            continue
        key = _window(g, i - size + 2, i)
        pairs_base = list(range(i - width + 1, i + 1))
        for comp in _local_components(g, i, width):
            ok = False
            for tmpl in _templates(size):
                pairs = [(c, t) for c, t in zip(pairs_base, tmpl.colors)]
                if match_vertices(g, comp, key, tmpl, tmpl.vertices, lambda v, t=tmpl: t.sigma[v], pairs):
                    ok = True
                    break
            if not ok:
                return f"{width}-color component at i={i} containing {describe_vertex(g, comp[0])} matches no template"
    return None


def check_ax6(g: SignedColoredGraph) -> str | None:
    """Within each component of E_2..E_i, every two components of
    E_2..E_{i-1} are joined by a direct i-edge and are non-isomorphic."""
    for i in g.colors:
        witness = ax6_violation(g, i)
        if witness is not None:
            return witness
    return None


def ax6_violation(g: SignedColoredGraph, i: int, vertices: Sequence[int] | None = None) -> str | None:
    """The check for color i alone, optionally limited to one component
    of E_2..E_i."""
    pool = g.vertices if vertices is None else vertices
    small = connected_components(g, range(2, i), pool)
    label = {}
    for idx, comp in enumerate(small):
        for v in comp:
            label[v] = idx
    for big in connected_components(g, range(2, i + 1), pool):
        parts = sorted({label[v] for v in big})
        if len(parts) == 1:
            continue
        joined = {p: {p} for p in parts}
        for v in big:
            joined[label[v]].add(label[g.E(i, v)])
        for p in parts:
            if len(joined[p]) != len(parts):
                missing = sorted(set(parts) - joined[p])[0]
                return (
                    f"color {i}: components of {describe_vertex(g, small[p][0])} and "
                    f"{describe_vertex(g, small[missing][0])} need two {i}-edges to connect"
                )
        keys = {}
        for p in parts:
            sig = tuple(sorted(g.sigma[v][: i - 1] for v in small[p]))
            if sig in keys:
                other = keys[sig]
                key = _window(g, 1, i - 1)
                if match_vertices(g, small[p], key, g, small[other], key, [(c, c) for c in range(2, i)]):
                    return (
                        f"color {i}: isomorphic components at {describe_vertex(g, small[p][0])} "
                        f"and {describe_vertex(g, small[other][0])}"
                    )
            keys[sig] = p
    return None


def _edges_in(g: SignedColoredGraph, comp: Sequence[int], colors: Sequence[int]) -> int:
    members = set(comp)
    return sum(1 for c in colors for a, b in g.edges(c) if a in members and b in members)


def check_ax4a(g: SignedColoredGraph) -> str | None:
    for i in range(3, g.n):
        for comp in _local_components(g, i, 2):
            if len(comp) > 1:
                count = sum(1 for c in (i - 1, i) for v in comp if g.E(c, v) != v) // 2
                if count not in (2, 4):
                    return f"component of colors {i - 1},{i} at {describe_vertex(g, comp[0])} has {count} edges"
    return None


def check_ax4b(g: SignedColoredGraph) -> str | None:
    for i in range(4, g.n):
        for w in g.vertices:
            e2, ei = g.E(i - 2, w), g.E(i, w)
            if g.s(w, i - 1) == -g.s(e2, i - 1) and g.s(w, i - 2) == -g.s(ei, i - 2):
                if g.E(i - 1, w) not in (e2, ei):
                    return f"i={i} at {describe_vertex(g, w)}"
    return None


def check_ax4c(g: SignedColoredGraph, notes: list[str] | None = None) -> str | None:
    for i in range(4, g.n):
        if i + 1 >= g.N:
            if notes is not None:
                notes.append(f"4'c skipped at i={i}: position {i + 1} of the signature is undefined")
            continue
        for w in g.vertices:
            if i_type(g, w, i) == "C" and i_type(g, w, i + 1) == "W":
                u = g.E(i - 2, w)
                if not (i_type(g, u, i) == "C" and i_type(g, u, i + 1) == "W"):
                    return f"i={i} at {describe_vertex(g, w)}, neighbor {describe_vertex(g, u)}"
    return None


@lru_cache(maxsize=65536)
def _schur_positive(degree: int, sigs: tuple[Signature, ...]) -> bool:
    terms: dict[Signature, object] = {}
    for s in sigs:
        terms[s] = terms.get(s, 0) + 1
    try:
        extract_schur(QSymAggregate(degree, {s: ONE * c for s, c in terms.items()}))
    except NotSchurPositive:
        return False
    return True


def check_lsp(g: SignedColoredGraph, max_color: int | None = None) -> str | None:
    """Restricted degree-4 and degree-5 generating functions of local
    components are Schur positive."""
    top = g.n if max_color is None else min(g.n, max_color + 1)
    for width, size in ((2, 4), (3, 5)):
        for i in range(width + 1, top):
            key = _window(g, i - size + 2, i)
            for comp in _local_components(g, i, width):
                sigs = tuple(sorted(key(v) for v in comp))
                if not _schur_positive(size, sigs):
                    return f"degree {size} at i={i}, component of {describe_vertex(g, comp[0])}"
    return None


def is_d_graph(g: SignedColoredGraph) -> bool:
    return check_axioms(g, D_GRAPH).passes(D_GRAPH)


def signature_census(g: SignedColoredGraph, comp: Sequence[int]) -> Counter:
    return Counter(g.sigma[v] for v in comp)
