"""Small hand-encoded graphs used as worked examples and test fixtures.

Edges are written as ``"a b 3"`` for a 3-edge between a and b, or
``"a b 2,3"`` for a 2-edge and a 3-edge on the same pair.  Signatures are
written with ``+`` and ``-``.  Two of the graphs come without signatures;
for those the signature of every vertex is solved from its edges.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .deg_core import SignedColoredGraph, connected_components
from .errors import DomainError
from .shapes_tableaux import parse_signature


def _edges(spec: str) -> dict[int, list[tuple[str, str]]]:
    out: dict[int, list[tuple[str, str]]] = {}
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        a, b, colors = item.split()
        for c in colors.split(","):
            out.setdefault(int(c), []).append((a, b))
    return out


def _graph(n: int, vertices: str, edges: str) -> SignedColoredGraph:
    """Build from ``"label sigma, ..."`` and an edge list."""
    pairs = [item.split() for item in vertices.split(",") if item.strip()]
    labels = [p[0] for p in pairs]
    sigma = [parse_signature(p[1]) for p in pairs]
    index = {lab: j for j, lab in enumerate(labels)}
    colored = {c: [(index[a], index[b]) for a, b in es] for c, es in _edges(edges).items()}
    return SignedColoredGraph(n, len(sigma[0]) + 1, sigma, colored, labels)


def _solved_graph(n: int, edges: str, first: str) -> SignedColoredGraph:
    """Build a graph whose signatures are forced by its edges.

    A vertex admits an i-neighbor exactly when positions i-1 and i of its
    signature differ, so the edges fix every signature up to its first
    entry.  Edges of color 2 flip the first entry and edges of color at
    least 4 keep it, which ties vertices into classes; the remaining free
    choice per class is settled by requiring the local sign condition on
    every edge.  ``first`` gets a leading ``+``.
    """
    colored = _edges(edges)
    labels: list[str] = []
    for es in colored.values():
        for a, b in es:
            for lab in (a, b):
                if lab not in labels:
                    labels.append(lab)
    labels.remove(first)
    labels.insert(0, first)
    index = {lab: j for j, lab in enumerate(labels)}
    N = n
    has = {(index[a], c) for c, es in colored.items() for e in es for a in e}
    # relative signs: flips[j] says whether position j+1 differs from position j
    shapes = []
    for v in range(len(labels)):
        sig = [1]
        for c in range(2, N):
            sig.append(-sig[-1] if (v, c) in has else sig[-1])
        shapes.append(tuple(sig))
    links = {c: [(index[a], index[b]) for a, b in es] for c, es in colored.items()}
    probe = SignedColoredGraph(n, N, shapes, links, labels)
    tie_colors = [c for c in probe.colors if c == 2 or c >= 4]
    classes = connected_components(probe, tie_colors)
    parity: dict[int, int] = {}
    for cls in classes:
        parity[cls[0]] = 1
        stack = [cls[0]]
        while stack:
            v = stack.pop()
            for c in tie_colors:
                u = probe.E(c, v)
                if u != v and u not in parity:
                    parity[u] = -parity[v] if c == 2 else parity[v]
                    stack.append(u)
    from .axioms import check_ax2, check_ax3

    for bits in itertools.product((1, -1), repeat=len(classes) - 1):
        sign = {}
        for cls, b in zip(classes, (1,) + bits):
            for v in cls:
                sign[v] = b * parity[v]
        sigma = [tuple(sign[v] * x for x in shapes[v]) for v in range(len(labels))]
        g = SignedColoredGraph(n, N, sigma, links, labels)
        if check_ax2(g) is None and check_ax3(g) is None:
            return g
    raise DomainError("no signature assignment satisfies the sign conditions")


G32 = ("a +-++, b -+-+, c -++-, d +-+-, e ++-+", "a b 2,3; b c 4; c d 2; d e 3,4")
G311 = (
    "u --++, v -+-+, w +--+, x -++-, y +-+-, z ++--",
    "u v 3; v w 2; v x 4; w y 4; x y 2; y z 3",
)
G41 = ("h -+++, i +-++, j ++-+, k +++-", "h i 2; i j 3; j k 4")

_G321_VERTICES = (
    "b2 +--++, a3 -+-++, a4 --+-+, b5 --++-, c2 +-+-+, c5 -+-+-, d1 -+--+, d3 +-++-, "
    "d4 +--+-, d6 -++-+, e2 -+-+-, e5 +-+-+, f2 -++--, g3 +-+--, g4 ++-+-, f5 ++--+"
)
_G321_EDGES = (
    "a3 a4 3,4; b2 a3 2; a4 b5 5; b2 c2 4; b5 c5 3; d1 c2 2,3; c2 d3 5; d4 c5 2; c5 d6 4,5; "
    "d1 e2 5; e2 d3 2,3; d4 e5 4,5; e5 d6 2; e2 f2 4; e5 f5 3; f2 g3 2; g3 g4 3,4"
)


def standard_examples() -> dict[tuple[int, ...], SignedColoredGraph]:
    """Hand-drawn standard graphs for (3,2), (3,1,1), (4,1) and (3,2,1)."""
    return {
        (3, 2): _graph(5, *G32),
        (3, 1, 1): _graph(5, *G311),
        (4, 1): _graph(5, *G41),
        (3, 2, 1): _graph(6, _G321_VERTICES, _G321_EDGES + "; g4 f5 5"),
    }


def double_cover_graph() -> SignedColoredGraph:
    """Two copies of the (3,2,1) graph with one pair of 5-edges crossed.

    Every local condition holds, yet each component of colors 2..5 holds
    two copies of each smaller standard graph.
    """
    verts = [item.strip() for item in _G321_VERTICES.split(",")]
    doubled = ", ".join(verts + ["x" + v for v in verts])
    edges = [e.strip() for e in _G321_EDGES.split(";")]
    primed = ["x" + e.split()[0] + " x" + e.split()[1] + " " + e.split()[2] for e in edges]
    return _graph(6, doubled, "; ".join(edges + primed + ["g4 xf5 5", "xg4 f5 5"]))


def domino_graph() -> SignedColoredGraph:
    """A component of the LLT graph of ((3),(2,1)) with k = 2."""
    return _graph(
        6,
        "I +-+++, G -+-++, E -++-+, A -+++-, F +-+-+, H ++-++, D +++-+, C ++-+-, B +-++-",
        "A B 2; B C 3; C D 4,5; A E 5; B F 5; E F 2; E G 4; F H 3,4; G I 2,3",
    )


def non_standard_graph() -> SignedColoredGraph:
    """A connected graph with generating function s(3,2) + s(4,1)."""
    return _graph(
        5,
        "b2 ++-+, a2 +++-, a1 +-++, b1 -+-+, c1 -++-, c2 +-+-, c3 ++-+, b3 +-++, a3 -+++",
        "a1 b1 2,3; c1 b1 4; c1 c2 2; b2 a2 4; b2 c2 3; c2 c3 4; a3 b3 2; b3 c3 3",
    )


_BOX_VERTICES = (
    "t1 +--+, t2 -+-+, t3 +-++, t4 -+-+, t5 --+-, m0 ++--, m1 +-+-, m2 -++-, m4 -++-, "
    "m5 -+-+, m6 --++, b1 -+--, b2 +-+-, b3 ++-+, b4 +-+-, b5 +--+"
)


def box_graph() -> SignedColoredGraph:
    """A 16-vertex graph with generating function s(3,2) + s(3,1,1) + s(2,2,1)
    whose 2-color components are not all standard."""
    return _graph(
        5,
        _BOX_VERTICES,
        "t1 t2 2; t2 t3 3; t3 t4 2; t4 t5 3; t1 m1 4; t2 m2 4; t4 m4 4; t5 m5 4; m0 m1 3; "
        "m5 m6 3; m1 b1 2; m2 b2 2; m4 b4 2; m5 b5 2; b1 b2 3; b2 b3 4; b3 b4 3; b4 b5 4",
    )


def box_graph_repaired() -> SignedColoredGraph:
    """The box graph after swapping its 3-edges and then its 4-edges."""
    return _graph(
        5,
        _BOX_VERTICES,
        "t1 t2 2; t3 t4 2,3; t2 t5 3,4; t1 m1 4; t4 m4 4; m2 m5 4; m0 b2 3; m5 m6 3; m1 b1 2,3; "
        "m2 b2 2; m4 b4 2; m5 b5 2; b5 b2 4; b3 b4 3,4",
    )


_FROG_VERTICES = (
    "A0 +++-, A1 ++-+, B1 +-++, C1 -+-+, D1 +-+-, E1 ++-+, F1 +-++, F0 -+++, C2 -++-, "
    "D2 -++-, B3 ++--, C3 +-+-, D3 -+-+, E3 --++, CD +--+"
)


def frog_graph() -> SignedColoredGraph:
    """A 15-vertex graph with generating function s(4,1) + s(3,2) + s(3,1,1)
    that needs a three-color swap on top of the two-color ones."""
    return _graph(
        5,
        _FROG_VERTICES,
        "A0 A1 4; F1 F0 2; A1 B1 3; B1 C1 2; C1 D1 3; D1 E1 4; E1 F1 3; C2 C1 4; D1 D2 2; "
        "C3 C2 2; D2 D3 4; B3 C3 3; C3 CD 4; CD D3 2; D3 E3 3",
    )


def frog_graph_repaired() -> SignedColoredGraph:
    """The frog graph after its 3-edge, 4-edge and three-color swaps."""
    return _graph(
        5,
        _FROG_VERTICES,
        "A0 E1 4; B1 C1 2,3; E1 F1 3; A1 D1 3,4; F1 F0 2; D1 D2 2; C2 D3 4; D2 C1 4; C3 C2 2; "
        "CD D3 2; B3 C3 3; C3 CD 4; D3 E3 3",
    )


@lru_cache(maxsize=None)
def _fails_4c() -> SignedColoredGraph:
    return _solved_graph(
        6,
        "b1 c1 3,4; c1 d1 5; d1 e1 3; e1 f1 4; c1 c2 2; d1 d2 2; e1 e2 5; h1 h2 4; a2 b2 2,3; "
        "b2 c2 4; c2 d2 5; g2 h2 5; e2 e3 3; g2 g3 3; h2 h3 3; b3 c3 3,4; c3 d3 2; d3 e3 4; "
        "e3 f3 2; f3 g3 4; g3 h3 5; b3 b4 5; e3 e4 5; f3 f4 5; g3 g4 2; h3 h4 2; e4 f4 2,3; "
        "g4 h4 5; b4 b5 3; f4 f5 4; g4 g5 4; b5 c5 4,5; b5 b6 2; c5 c6 2; f5 f6 2; g5 g6 2,3; "
        "b6 c6 4,5; c6 d6 3; d6 e6 5; e6 f6 3,4",
        "b1",
    )


@lru_cache(maxsize=None)
def _fails_4b() -> SignedColoredGraph:
    return _solved_graph(
        6,
        "z1 a0 2; a0 b0 3; b0 c0 4; g0 h0 4; h0 i0 3; i0 y1 2; c0 c2 5; g0 g2 5; c2 d2 4; "
        "d2 e1 2,3; d2 e3 5; e3 f2 2,3; e1 f2 5; f2 g2 4; c2 c4 3; g2 g4 3; a4 b4 5; b4 c4 4; "
        "g4 h4 4; h4 i4 5; a4 a6 2; b4 b6 2; c4 c6 2; g4 g6 2; h4 h6 2; i4 i6 2; a6 b6 5; "
        "c6 d6 4; d6 e7 2,3; d6 e5 5; e5 f6 2,3; e7 f6 5; f6 g6 4; h6 i6 5; a6 a8 3; b6 b8 3,4; "
        "h6 h8 3,4; i6 i8 3; z8 a8 4,5; i8 y8 4,5",
        "z1",
    )


def fails_4c_graph() -> SignedColoredGraph:
    """A graph meeting every local condition except the one on vertices of
    i-type C and (i+1)-type W."""
    return _fails_4c().copy()


def fails_4b_graph() -> SignedColoredGraph:
    """A graph meeting every local condition except the one on double sign
    changes across colors i-2 and i."""
    return _fails_4b().copy()
