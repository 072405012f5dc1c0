"""Signed, colored graphs and the standard dual equivalence graphs.

A signed, colored graph of type (n, N) has vertices carrying signatures of
length N-1 and, for each color 2 <= i <= n-1, a set of edges.  Vertices
are stored by index; labels, words and statistics travel as payload.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import DomainError
from .poly import Poly
from .shapes_tableaux import (
    Cell,
    Partition,
    Signature,
    SkewShape,
    StandardTupleTableau,
    TupleShape,
    Word,
    content_reading_word,
    descent_signature,
    enumerate_standard,
    partition_signature,
    runs_composition,
    signature_str,
)
from .symfunc import QSymAggregate

Edge = tuple[int, int]


class SignedColoredGraph:
    """Vertices ``0..len-1`` with signatures and colored edge sets."""

    def __init__(
        self,
        n: int,
        N: int,
        sigma: Sequence[Sequence[int]],
        edges: Mapping[int, Iterable[tuple[int, int]]] | None = None,
        labels: Sequence[str] | None = None,
        words: Sequence[Word | None] | None = None,
        stats: Sequence[int | None] | None = None,
        edge_kinds: Mapping[int, Mapping[Edge, str]] | None = None,
    ) -> None:
        if n > N:
            raise DomainError(f"type ({n},{N}) needs n <= N")
        self.n = int(n)
        self.N = int(N)
        self.sigma: list[Signature] = [tuple(int(x) for x in s) for s in sigma]
        for s in self.sigma:
            if len(s) != self.N - 1 or any(x not in (1, -1) for x in s):
                raise DomainError(f"signature {s} is not a +-1 vector of length {self.N - 1}")
        size = len(self.sigma)
        self.labels = list(labels) if labels is not None else [f"v{j}" for j in range(size)]
        self.words = list(words) if words is not None else [None] * size
        self.stats = list(stats) if stats is not None else [None] * size
        if not len(self.labels) == len(self.words) == len(self.stats) == size:
            raise DomainError("payload lengths do not match the vertex count")
        if len(set(self.labels)) != size:
            raise DomainError("vertex labels must be distinct")
        self._edges: dict[int, set[Edge]] = {i: set() for i in self.colors}
        self._partner: dict[int, dict[int, int]] = {i: {} for i in self.colors}
        self._adj: dict[int, dict[int, list[int]]] = {i: {} for i in self.colors}
        self.edge_kinds: dict[int, dict[Edge, str]] = {i: {} for i in self.colors}
        for i, pairs in (edges or {}).items():
            i = int(i)
            if i not in self._edges:
                raise DomainError(f"color {i} is outside 2..{self.n - 1}")
            for a, b in pairs:
                self.add_edge(i, a, b)
        for i, kinds in (edge_kinds or {}).items():
            for e, kind in kinds.items():
                self.edge_kinds[int(i)][_norm(*e)] = kind
        self._label_index: dict[str, int] | None = None
        self.meta: dict = {}

    # basic structure

    @property
    def colors(self) -> range:
        return range(2, self.n)

    def __len__(self) -> int:
        return len(self.sigma)

    @property
    def vertices(self) -> range:
        return range(len(self.sigma))

    def index_of(self, label: str) -> int:
        if self._label_index is None:
            self._label_index = {lab: j for j, lab in enumerate(self.labels)}
        return self._label_index[label]

    def add_edge(self, i: int, a: int, b: int) -> None:
        a, b = int(a), int(b)
        if a == b:
            raise DomainError("an edge needs two distinct vertices")
        if not (0 <= a < len(self) and 0 <= b < len(self)):
            raise DomainError("edge endpoint out of range")
        e = _norm(a, b)
        if e in self._edges[i]:
            return
        self._edges[i].add(e)
        self._adj[i].setdefault(a, []).append(b)
        self._adj[i].setdefault(b, []).append(a)
        self._partner[i].setdefault(a, b)
        self._partner[i].setdefault(b, a)

    def edges(self, i: int) -> list[Edge]:
        return sorted(self._edges.get(i, ()))

    def all_edges(self) -> dict[int, list[Edge]]:
        return {i: self.edges(i) for i in self.colors}

    def edge_count(self) -> int:
        return sum(len(e) for e in self._edges.values())

    def E(self, i: int, v: int) -> int:
        """The i-neighbor of v, or v itself when there is none."""
        part = self._partner.get(i)
        return part.get(v, v) if part is not None else v

    def has_edge(self, i: int, v: int) -> bool:
        part = self._partner.get(i)
        return part is not None and v in part

    def neighbors(self, i: int, v: int) -> list[int]:
        adj = self._adj.get(i)
        return sorted(adj.get(v, ())) if adj is not None else []

    def s(self, v: int, j: int) -> int:
        """Signature entry ``sigma(v)_j`` with 1-based j."""
        return self.sigma[v][j - 1]

    def admits(self, v: int, h: int) -> bool:
        """Whether v admits an h-neighbor, read from the signature."""
        return 2 <= h <= self.n - 1 and h <= self.N - 1 and self.sigma[v][h - 2] == -self.sigma[v][h - 1]

    # rewiring, used by the transform

    def copy(self) -> "SignedColoredGraph":
        g = SignedColoredGraph.__new__(SignedColoredGraph)
        g.n, g.N = self.n, self.N
        g.sigma = list(self.sigma)
        g.labels, g.words, g.stats = list(self.labels), list(self.words), list(self.stats)
        g._edges = {i: set(e) for i, e in self._edges.items()}
        g._partner = {i: dict(p) for i, p in self._partner.items()}
        g._adj = {i: {v: list(x) for v, x in a.items()} for i, a in self._adj.items()}
        g.edge_kinds = {i: dict(k) for i, k in self.edge_kinds.items()}
        g._label_index = self._label_index
        g.meta = dict(self.meta)
        return g

    def set_color(self, i: int, partner: Mapping[int, int]) -> None:
        """Replace E_i by the involution ``partner`` (fixed points dropped)."""
        edges = set()
        for a, b in partner.items():
            if a != b:
                if partner.get(b) != a:
                    raise DomainError(f"color {i} rewiring is not an involution at {a}")
                edges.add(_norm(a, b))
        kinds = self.edge_kinds.get(i, {})
        self.edge_kinds[i] = {e: kinds[e] for e in edges if e in kinds}
        self._edges[i] = edges
        self._partner[i] = {a: b for a, b in partner.items() if a != b}
        self._adj[i] = {a: [b] for a, b in self._partner[i].items()}

    def partner_map(self, i: int) -> dict[int, int]:
        return dict(self._partner[i])

    # derived graphs

    def restrict(self, m: int, M: int) -> "SignedColoredGraph":
        """The (m, M)-restriction: signatures cut to length M-1, colors below m."""
        if not (m <= self.n and M <= self.N and m <= M and m >= 1):
            raise DomainError(f"restriction ({m},{M}) is not allowed for type ({self.n},{self.N})")
        return SignedColoredGraph(
            m,
            M,
            [s[: M - 1] for s in self.sigma],
            {i: self._edges[i] for i in range(2, m)},
            self.labels,
            self.words,
            self.stats,
            {i: self.edge_kinds[i] for i in range(2, m)},
        )

    def subgraph(self, vertices: Iterable[int]) -> "SignedColoredGraph":
        """Induced subgraph; vertices are renumbered in increasing order."""
        vs = sorted(set(vertices))
        index = {v: j for j, v in enumerate(vs)}
        edges = {
            i: [(index[a], index[b]) for a, b in self._edges[i] if a in index and b in index] for i in self.colors
        }
        kinds = {
            i: {(index[a], index[b]): k for (a, b), k in self.edge_kinds[i].items() if a in index and b in index}
            for i in self.colors
        }
        return SignedColoredGraph(
            self.n,
            self.N,
            [self.sigma[v] for v in vs],
            edges,
            [self.labels[v] for v in vs],
            [self.words[v] for v in vs],
            [self.stats[v] for v in vs],
            kinds,
        )

    def components(self, colors: Iterable[int] | None = None, vertices: Iterable[int] | None = None) -> list[list[int]]:
        return connected_components(self, self.colors if colors is None else colors, vertices)

    def __repr__(self) -> str:
        return f"SignedColoredGraph(type=({self.n},{self.N}), vertices={len(self)}, edges={self.edge_count()})"


def _norm(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def connected_components(
    g: SignedColoredGraph, colors: Iterable[int], vertices: Iterable[int] | None = None
) -> list[list[int]]:
    """Components under the union of the chosen colors, each sorted, listed
    by smallest vertex."""
    colors = [c for c in colors if c in g._edges]
    pool = sorted(set(vertices)) if vertices is not None else list(g.vertices)
    allowed = set(pool)
    seen: set[int] = set()
    out = []
    for start in pool:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for c in colors:
                for u in g._adj[c].get(v, ()):
                    if u in allowed and u not in seen:
                        seen.add(u)
                        comp.append(u)
                        stack.append(u)
        out.append(sorted(comp))
    return out


def elementary_dual_equivalence(w: Sequence[int], i: int) -> Word:
    """Swap i with the farther of i-1, i+1 unless i sits between them."""
    w = tuple(w)
    pos = {v: p for p, v in enumerate(w)}
    a, b, c = pos[i - 1], pos[i], pos[i + 1]
    if min(a, c) < b < max(a, c):
        return w
    other = i - 1 if abs(a - b) > abs(c - b) else i + 1
    out = list(w)
    out[pos[i]], out[pos[other]] = other, i
    return tuple(out)


def word_label(w: Sequence[int]) -> str:
    return "".join(map(str, w)) if len(w) < 10 else ".".join(map(str, w))


def _augmented_tableaux(lam: Partition, augment: Mapping[tuple[int, int], int] | None) -> tuple[list[Word], int]:
    n = lam.size
    base = enumerate_standard(TupleShape.of(lam.parts), max_size=max(n, 1))
    if not augment:
        return [content_reading_word(t) for t in base], n
    extra = {Cell(*c): int(v) for c, v in augment.items()}
    N = n + len(extra)
    if sorted(extra.values()) != list(range(n + 1, N + 1)):
        raise DomainError("augmenting entries must be n+1..N")
    cells = set(lam.cells()) | set(extra)
    if cells & set(lam.cells()) != set(lam.cells()) or len(cells) != N:
        raise DomainError("augmenting cells overlap the base shape")
    rho = SkewShape.from_cells(list(cells))
    if rho.inner.parts or rho.cells != frozenset(cells):
        raise DomainError("base shape plus augmenting cells is not a partition")
    words = []
    for t in base:
        full = dict(t.entries[0])
        full.update(extra)
        tab = StandardTupleTableau(TupleShape((rho,)), (tuple(full.items()),))
        words.append(content_reading_word(tab))
    return words, N


def build_standard_deg(lam: Partition | Sequence[int], augment: Mapping[tuple[int, int], int] | None = None) -> SignedColoredGraph:
    """The standard dual equivalence graph on SYT(lam), optionally augmented
    by a fixed filling of extra cells with n+1..N."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    words, N = _augmented_tableaux(lam, augment)
    n = lam.size
    return graph_from_words(words, n, max(N, 1), involution=elementary_dual_equivalence)


def graph_from_words(
    words: Sequence[Word],
    n: int,
    N: int,
    involution: Callable[[Word, int], Word],
    stats: Sequence[int | None] | None = None,
    kind_of: Callable[[Word, int], str] | None = None,
) -> SignedColoredGraph:
    """Graph whose E_i pairs each word with its image under ``involution``."""
    index = {w: j for j, w in enumerate(words)}
    sigma = [descent_signature(w) for w in words]
    edges: dict[int, set[Edge]] = {i: set() for i in range(2, n)}
    kinds: dict[int, dict[Edge, str]] = {i: {} for i in range(2, n)}
    for w, j in index.items():
        for i in range(2, n):
            x = involution(w, i)
            if x != w:
                if x not in index:
                    raise DomainError(f"involution leaves the vertex set at {w}, color {i}")
                e = _norm(j, index[x])
                edges[i].add(e)
                if kind_of is not None:
                    kinds[i][e] = kind_of(w, i)
    return SignedColoredGraph(
        n,
        N,
        [s + (1,) * (N - 1 - len(s)) if len(s) < N - 1 else s for s in sigma],
        edges,
        [word_label(w) for w in words],
        list(words),
        stats,
        kinds,
    )


@lru_cache(maxsize=None)
def standard_graph(parts: tuple[int, ...]) -> SignedColoredGraph:
    """Cached G_lambda; callers must not mutate the result."""
    return build_standard_deg(Partition(parts))


# isomorphism


def match_vertices(
    g: SignedColoredGraph,
    gverts: Iterable[int],
    gkey: Callable[[int], Hashable],
    h: SignedColoredGraph,
    hverts: Iterable[int],
    hkey: Callable[[int], Hashable],
    color_pairs: Sequence[tuple[int, int]],
    anchor: tuple[int, int] | None = None,
) -> dict[int, int] | None:
    """A key-preserving bijection gverts -> hverts carrying each g-color
    edge onto the paired h-color edge, or None.

    Anchor a vertex, propagate along edges using uniqueness of neighbors,
    and backtrack over key-compatible candidates only when a part of the
    vertex set is not reached by propagation.
    """
    gset, hset = set(gverts), set(hverts)
    if len(gset) != len(hset):
        return None
    if Counter(gkey(v) for v in gset) != Counter(hkey(v) for v in hset):
        return None
    for gc, hc in color_pairs:
        gc_count = sum(1 for v in gset if g.E(gc, v) != v and g.E(gc, v) in gset)
        hc_count = sum(1 for v in hset if h.E(hc, v) != v and h.E(hc, v) in hset)
        if gc_count != hc_count:
            return None
    rarity = Counter(gkey(v) for v in gset)
    gorder = sorted(gset, key=lambda v: (rarity[gkey(v)], v))
    hbykey: dict[Hashable, list[int]] = {}
    for v in sorted(hset):
        hbykey.setdefault(hkey(v), []).append(v)

    def propagate(mapping: dict[int, int], used: set[int], gv: int, hv: int) -> bool:
        mapping[gv] = hv
        used.add(hv)
        stack = [(gv, hv)]
        while stack:
            a, x = stack.pop()
            for gc, hc in color_pairs:
                b, y = g.E(gc, a), h.E(hc, x)
                b_in = b != a and b in gset
                y_in = y != x and y in hset
                if b_in != y_in:
                    return False
                if not b_in:
                    continue
                if b in mapping:
                    if mapping[b] != y:
                        return False
                    continue
                if y in used or gkey(b) != hkey(y):
                    return False
                mapping[b] = y
                used.add(y)
                stack.append((b, y))
        return True

    def solve(mapping: dict[int, int], used: set[int]) -> dict[int, int] | None:
        rest = [v for v in gorder if v not in mapping]
        if not rest:
            return mapping
        gv = rest[0]
        for hv in hbykey.get(gkey(gv), []):
            if hv in used:
                continue
            m2, u2 = dict(mapping), set(used)
            if propagate(m2, u2, gv, hv):
                found = solve(m2, u2)
                if found is not None:
                    return found
        return None

    if anchor is not None:
        gv, hv = anchor
        if gv not in gset or hv not in hset or gkey(gv) != hkey(hv):
            return None
        mapping: dict[int, int] = {}
        used: set[int] = set()
        if not propagate(mapping, used, gv, hv):
            return None
        return solve(mapping, used)
    return solve({}, set())


def find_isomorphism(
    g: SignedColoredGraph,
    h: SignedColoredGraph,
    gverts: Iterable[int] | None = None,
    hverts: Iterable[int] | None = None,
) -> dict[int, int] | None:
    """Signature- and color-preserving bijection between (parts of) two
    graphs of the same type, or None."""
    if (g.n, g.N) != (h.n, h.N):
        return None
    colors = [(i, i) for i in g.colors]
    return match_vertices(
        g,
        g.vertices if gverts is None else gverts,
        lambda v: g.sigma[v],
        h,
        h.vertices if hverts is None else hverts,
        lambda v: h.sigma[v],
        colors,
    )


def component_shape(g: SignedColoredGraph, component: Sequence[int]) -> Partition | None:
    """The partition lam with this component isomorphic to G_lam, if any."""
    n = g.n
    shaped = []
    for v in component:
        comp = runs_composition(g.sigma[v][: n - 1])
        if comp.is_partition():
            shaped.append(comp.to_partition())
    if not shaped:
        return None
    lam = max(shaped, key=lambda p: p.parts)
    if shaped.count(lam) != 1 or lam.size != n:
        return None
    target = standard_graph(lam.parts)
    if len(target) != len(component):
        return None
    mapping = match_vertices(
        g,
        component,
        lambda v: g.sigma[v][: n - 1],
        target,
        target.vertices,
        lambda v: target.sigma[v],
        [(i, i) for i in g.colors],
    )
    return lam if mapping is not None else None


# packages and types


def i_package(g: SignedColoredGraph, v: int, i: int, edges_from: SignedColoredGraph | None = None) -> list[int]:
    """Component of v under colors 2..i-3 and i+3..n-1.

    ``edges_from`` supplies the edges when they should be read from another
    graph on the same vertices.
    """
    src = edges_from if edges_from is not None else g
    return _component_of(src, package_colors(g, i), v)


def _component_of(g: SignedColoredGraph, colors: Sequence[int], v: int) -> list[int]:
    seen = {v}
    stack = [v]
    while stack:
        a = stack.pop()
        for c in colors:
            b = g.E(c, a)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return sorted(seen)


def package_key(g: SignedColoredGraph, i: int) -> Callable[[int], Signature]:
    """Signature positions retained on i-packages: 1..i-3 and i+2..N-1."""
    keep = [j for j in range(1, g.N) if j <= i - 3 or j >= i + 2]
    return lambda v: tuple(g.sigma[v][j - 1] for j in keep)


def package_colors(g: SignedColoredGraph, i: int) -> list[int]:
    return [c for c in g.colors if c <= i - 3 or c >= i + 3]


def i_type(g: SignedColoredGraph, v: int, i: int) -> str:
    """The i-type W, A, B or C of vertex v."""
    if not (2 <= i <= g.n and i < g.N):
        raise DomainError(f"i-type needs 2 <= i <= n and i < N, got i={i}")
    s = g.s
    e1 = g.E(i - 1, v)
    if s(v, i) == -s(e1, i):
        return "W"
    if not g.admits(v, i - 2):
        return "A"
    e2 = g.E(i - 2, v)
    if g.admits(v, i - 1):
        flip = s(v, i - 1) == -s(e2, i - 1)
    else:
        flip = s(v, i) == -s(g.E(i - 1, e2), i)
    return "B" if flip else "C"


# generating functions


def generating_function(
    g: SignedColoredGraph, component: Iterable[int] | None = None, statistic: str | None = "stat"
) -> QSymAggregate:
    """Sum of q^stat(v) Q_sigma(v) over the component."""
    verts = g.vertices if component is None else component
    terms: dict[Signature, Poly] = {}
    for v in verts:
        if statistic is None:
            e = 0
        else:
            e = g.stats[v]
            if e is None:
                raise DomainError(f"vertex {g.labels[v]} carries no statistic")
        terms[g.sigma[v]] = terms.get(g.sigma[v], Poly()) + Poly.monomial(e)
    return QSymAggregate(g.N, terms)


def shape_signature(lam: Partition) -> Signature:
    return partition_signature(lam)


def describe_vertex(g: SignedColoredGraph, v: int) -> str:
    return f"{g.labels[v]}[{signature_str(g.sigma[v])}]"
