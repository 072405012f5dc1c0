"""Rewiring a D graph into a dual equivalence graph.

The graph is repaired one color at a time.  At color i, ``apply_phi`` and
``apply_psi`` swap i-edges between isomorphic packages until every small
local component is standard, then ``apply_theta`` regroups the i-edges of
each covering component until it is a single standard graph.  Vertices,
signatures and statistics never change; only edge sets are rewired.

Every step is applied tentatively and checked.  When a step would break
local Schur positivity, a short list of other maps is tried first, and a
step that cannot be made to work aborts with ``TransformFailed``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .axioms import (
    AXIOMS,
    D_GRAPH,
    ax4_violation,
    ax6_violation,
    check_ax1,
    check_ax2,
    check_ax3,
    check_ax5,
    check_axioms,
    check_lsp,
)
from .deg_core import (
    SignedColoredGraph,
    connected_components,
    describe_vertex,
    i_package,
    i_type,
    match_vertices,
    package_colors,
    package_key,
)
from .errors import DomainError, TransformFailed, TransformObstruction
from .shapes_tableaux import Partition, runs_composition

MAPS = ("phi", "psi", "theta")


@dataclass(frozen=True)
class Event:
    """One applied map, anchored at a vertex label."""

    step: int
    map: str
    i: int
    anchor: str

    def to_json(self) -> dict:
        return {"step": self.step, "map": self.map, "i": self.i, "anchor": self.anchor}

    @classmethod
    def from_json(cls, data: dict) -> "Event":
        if data["map"] not in MAPS:
            raise DomainError(f"unknown map {data['map']!r}")
        return cls(int(data["step"]), str(data["map"]), int(data["i"]), str(data["anchor"]))


@dataclass
class TransformState:
    """Mutable working graph for one component plus the log of applied maps.

    ``remembered`` holds the graph as it stood when the current color
    started, so that maps for higher colors can read the earlier edges.
    """

    graph: SignedColoredGraph
    i: int = 2
    events: list[Event] = field(default_factory=list)
    remembered: SignedColoredGraph | None = None
    notes: list[str] = field(default_factory=list)

    def record(self, kind: str, i: int, anchor: int) -> None:
        self.events.append(Event(len(self.events) + 1, kind, i, self.graph.labels[anchor]))


@dataclass
class TransformResult:
    graph: SignedColoredGraph
    events: list[Event]
    notes: list[str] = field(default_factory=list)


# witness sets


def _order_key(g: SignedColoredGraph, v: int) -> tuple:
    word = g.words[v]
    return (tuple(word) if word is not None else (), g.labels[v])


def _sorted(g: SignedColoredGraph, vs) -> list[int]:
    return sorted(vs, key=lambda v: _order_key(g, v))


def _in_w(g: SignedColoredGraph, i: int, w: int) -> bool:
    return i_type(g, w, i) == "W" and g.E(i - 1, w) != g.E(i, w)


def _in_x(g: SignedColoredGraph, i: int, x: int) -> bool:
    if i_type(g, x, i) != "C" or g.admits(x, i - 1):
        return False
    return g.E(i - 2, g.E(i, x)) != g.E(i, g.E(i - 2, x))


def _color_in_range(g: SignedColoredGraph, i: int, low: int) -> bool:
    return low <= i <= g.n - 1 and i < g.N


def witnesses_W(g: SignedColoredGraph, i: int) -> list[int]:
    """Vertices of i-type W whose (i-1)- and i-neighbors differ, in
    witness order."""
    if not _color_in_range(g, i, 3):
        return []
    return _sorted(g, (w for w in g.vertices if _in_w(g, i, w)))


def witnesses_X(g: SignedColoredGraph, i: int) -> list[int]:
    """Vertices of i-type C with no (i-1)-neighbor at which E_{i-2} and
    E_i fail to commute, in witness order."""
    if not _color_in_range(g, i, 4):
        return []
    return _sorted(g, (x for x in g.vertices if _in_x(g, i, x)))


# package isomorphisms and rewiring


def package_isomorphism(
    g: SignedColoredGraph, w: int, u: int, i: int, edges_from: SignedColoredGraph | None = None
) -> dict[int, int]:
    """The isomorphism from the i-package of w onto that of u sending w to u.

    Packages are connected, so an isomorphism fixed at one vertex is
    determined by propagation along edges.
    """
    src = edges_from if edges_from is not None else g
    pw = i_package(g, w, i, src)
    pu = i_package(g, u, i, src)
    key = package_key(g, i)
    colors = [(c, c) for c in package_colors(g, i)]
    mapping = match_vertices(src, pw, key, src, pu, key, colors, anchor=(w, u))
    if mapping is None:
        raise TransformObstruction(
            f"no isomorphism of {i}-packages from {describe_vertex(g, w)} to {describe_vertex(g, u)}",
            i,
            g.labels[w],
            g.labels[u],
        )
    for a, b in mapping.items():
        assert key(a) == key(b)
    return mapping


def _as_involution(g: SignedColoredGraph, i: int, mapping: dict[int, int]) -> dict[int, int]:
    swap = dict(mapping)
    for a, b in mapping.items():
        if swap.setdefault(b, a) != a:
            raise TransformObstruction(
                f"package map at {describe_vertex(g, a)} is not an involution", i, g.labels[a], g.labels[b]
            )
    return swap


def _rewired(g: SignedColoredGraph, i: int, swap: dict[int, int]) -> dict[int, int]:
    """New i-partners: ``swap`` on the packages, conjugated by E_i next to
    them, unchanged elsewhere."""
    old = g.partner_map(i)
    new = {}
    for v, partner in old.items():
        if v in swap:
            target = swap[v]
        elif partner in swap:
            target = old.get(swap[partner], swap[partner])
        else:
            target = partner
        if target == v or target not in old:
            raise TransformObstruction(f"rewiring color {i} strands {describe_vertex(g, v)}", i, g.labels[v])
        new[v] = target
    for v, target in new.items():
        if new[target] != v:
            raise TransformObstruction(f"rewiring color {i} is not an involution at {describe_vertex(g, v)}", i, g.labels[v])
    return new


def _with_color(g: SignedColoredGraph, i: int, partner: dict[int, int]) -> SignedColoredGraph:
    h = g.copy()
    h.set_color(i, partner)
    return h


def apply_phi(
    g: SignedColoredGraph, i: int, w: int, edges_from: SignedColoredGraph | None = None
) -> SignedColoredGraph:
    """Swap the i-edges at the i-packages of w and of its (i-1)-neighbor."""
    if not _color_in_range(g, i, 3):
        raise DomainError(f"color {i} has no (i-1)-edges to pair with")
    if not _in_w(g, i, w):
        raise TransformObstruction(f"{describe_vertex(g, w)} is not a type W witness for color {i}", i, g.labels[w])
    if i - 3 >= 1:
        for v in i_package(g, w, i - 1, edges_from):
            if g.s(v, i - 3) != g.s(g.E(i - 1, v), i - 3):
                raise TransformObstruction(
                    f"position {i - 3} changes along color {i - 1} at {describe_vertex(g, v)}", i, g.labels[w]
                )
    u = g.E(i - 1, w)
    swap = _as_involution(g, i, package_isomorphism(g, w, u, i, edges_from))
    return _with_color(g, i, _rewired(g, i, swap))


def paired_vertex(g: SignedColoredGraph, i: int, x: int) -> int:
    """The vertex paired with x: E_i(x), or E_{i-1}E_{i-2}E_i(x) when
    E_{i-2}E_i(x) has no i-neighbor."""
    y = g.E(i, x)
    z = g.E(i - 2, y)
    return y if g.admits(z, i) else g.E(i - 1, z)


def apply_psi(
    g: SignedColoredGraph, i: int, x: int, edges_from: SignedColoredGraph | None = None
) -> SignedColoredGraph:
    """Swap the i-edges at the i-packages of E_{i-2}(x) and E_{i-2}(u)."""
    if not _color_in_range(g, i, 4):
        raise DomainError(f"color {i} has no (i-2)-edges to pair with")
    if not _in_x(g, i, x):
        raise TransformObstruction(f"{describe_vertex(g, x)} is not a type C witness for color {i}", i, g.labels[x])
    if i - 4 >= 1:
        for v in (x, g.E(i, x)):
            if g.s(v, i - 4) != g.s(g.E(i - 2, v), i - 4):
                raise TransformObstruction(
                    f"position {i - 4} changes along color {i - 2} at {describe_vertex(g, v)}", i, g.labels[x]
                )
    y = g.E(i, x)
    if not (i_type(g, y, i) == "C" or i_type(g, y, i - 1) == "W"):
        raise TransformObstruction(
            f"{describe_vertex(g, y)} has neither {i}-type C nor {i - 1}-type W", i, g.labels[x], g.labels[y]
        )
    for v in i_package(g, x, i, edges_from):
        if i_type(g, v, i) == "W":
            raise TransformObstruction(
                f"type W vertex {describe_vertex(g, v)} on the {i}-package of {describe_vertex(g, x)}", i, g.labels[x]
            )
    u = paired_vertex(g, i, x)
    a, b = g.E(i - 2, x), g.E(i - 2, u)
    if not (g.admits(a, i) and g.admits(b, i)):
        raise TransformObstruction(f"no {i}-neighbor at the ends of the swap for {describe_vertex(g, x)}", i, g.labels[x])
    swap = _as_involution(g, i, package_isomorphism(g, a, b, i, edges_from))
    return _with_color(g, i, _rewired(g, i, swap))


# regrouping covering components


def _shape_of(sigs: Sequence[tuple[int, ...]]) -> Partition | None:
    shaped = [runs_composition(s).to_partition() for s in sigs if runs_composition(s).is_partition()]
    return max(shaped, key=lambda p: p.parts) if shaped else None


def _high_sign(g: SignedColoredGraph, comp: Sequence[int], i: int) -> int:
    """sigma_{i+1} on a component of E_2..E_{i-1}; +1 when undefined."""
    if i + 1 > g.N - 1:
        return 1
    signs = {g.s(v, i + 1) for v in comp}
    if len(signs) != 1:
        raise TransformObstruction(f"position {i + 1} varies on the component of {describe_vertex(g, comp[0])}", i)
    return signs.pop()


def _corners_removed(lam: Partition) -> list[Partition]:
    out = []
    parts = list(lam.parts)
    for r, p in enumerate(parts):
        if r + 1 == len(parts) or parts[r + 1] < p:
            out.append(Partition.of(parts[:r] + [p - 1] + parts[r + 1 :]))
    return out


def regroup_component(g: SignedColoredGraph, i: int, cover: Sequence[int]) -> list[int]:
    """The component of E_2..E_{i-1} inside ``cover`` used to regroup it."""
    subs = connected_components(g, range(2, i), cover)
    lam = _shape_of([g.sigma[v][:i] for v in cover])
    if lam is None:
        raise TransformObstruction(f"component of {describe_vertex(g, cover[0])} has no shape", i)
    shapes = [_shape_of([g.sigma[v][: i - 1] for v in sub]) for sub in subs]
    signs = [_high_sign(g, sub, i) for sub in subs]
    if all(s == 1 for s in signs):
        mu = max(_corners_removed(lam), key=lambda p: p.parts)
        pool = [sub for sub, sh in zip(subs, shapes) if sh == mu]
    else:
        candidates = [sh for sh, s in zip(shapes, signs) if s == -1 and sh is not None]
        mu = max(candidates, key=lambda p: p.parts)
        pool = [sub for sub, sh, s in zip(subs, shapes, signs) if sh == mu and s == -1]
    if not pool:
        raise TransformObstruction(f"no component of shape {mu} under {describe_vertex(g, cover[0])}", i)
    return min(pool, key=lambda sub: min(_order_key(g, v) for v in sub))


def apply_theta(g: SignedColoredGraph, i: int, chosen: Sequence[int]) -> SignedColoredGraph:
    """Regroup the i-edges of the covering component containing ``chosen``
    so that the components i-adjacent to it pair with one another."""
    if not 2 <= i <= g.n - 1:
        raise DomainError(f"color {i} is outside 2..{g.n - 1}")
    cover = connected_components(g, range(2, i + 1), [v for v in g.vertices])
    cover = next(c for c in cover if chosen[0] in c)
    subs = connected_components(g, range(2, i), cover)
    which = {v: idx for idx, sub in enumerate(subs) for v in sub}
    home = which[chosen[0]]
    if set(subs[home]) != set(chosen):
        raise DomainError("the chosen vertices do not form a component of the lower colors")
    adjacent = sorted({which[g.E(i, v)] for v in subs[home] if g.E(i, v) != v} - {home})
    key = lambda v: g.sigma[v][: i - 1]
    lower = [(c, c) for c in range(2, i)]
    # the map from each component to its isomorphic copy among the adjacent ones
    to_adjacent: dict[int, dict[int, int]] = {}
    for idx, sub in enumerate(subs):
        found = []
        for b in adjacent:
            m = match_vertices(g, sub, key, g, subs[b], key, lower)
            if m is not None:
                found.append(m)
        if len(found) > 1:
            raise TransformObstruction(f"two adjacent copies match the component of {describe_vertex(g, sub[0])}", i)
        if found:
            to_adjacent[idx] = found[0]
    adjacent_set = set(adjacent)
    old = g.partner_map(i)
    new = dict(old)
    for u in cover:
        if u not in old:
            continue
        eu = old[u]
        if which[u] in adjacent_set and which[eu] in to_adjacent:
            new[u] = to_adjacent[which[eu]][eu]
        elif which[eu] in adjacent_set and which[u] in to_adjacent:
            image = to_adjacent[which[u]][u]
            new[u] = old.get(image, image)
        if new[u] == u or new[u] not in old:
            raise TransformObstruction(f"regrouping strands {describe_vertex(g, u)}", i, g.labels[u])
    for v, t in new.items():
        if new.get(t) != v:
            raise TransformObstruction(f"regrouping is not an involution at {describe_vertex(g, v)}", i, g.labels[v])
    return _with_color(g, i, new)


# driver


Step = tuple[str, int, int]

_APPLY: dict[str, Callable[..., SignedColoredGraph]] = {"phi": apply_phi, "psi": apply_psi}


def _basic_ok(g: SignedColoredGraph) -> bool:
    return all(check(g) is None for check in (check_ax1, check_ax2, check_ax3, check_ax5))


def _run(state: TransformState, steps: Sequence[Step]) -> SignedColoredGraph | None:
    h = state.graph
    try:
        for kind, j, v in steps:
            if kind == "theta":
                h = apply_theta(h, j, _lower_component(h, j, v))
            else:
                h = _APPLY[kind](h, j, v)
    except (TransformObstruction, DomainError):
        return None
    return h


def _lower_component(g: SignedColoredGraph, i: int, v: int) -> list[int]:
    return next(c for c in connected_components(g, range(2, i)) if v in c)


def _repairs(g: SignedColoredGraph, i: int) -> list[Step]:
    """Maps tried ahead of a step whose result fails local Schur positivity."""
    out: list[Step] = []
    out += [("psi", i, x) for x in witnesses_X(g, i)]
    out += [("phi", i + 1, y) for y in witnesses_W(g, i + 1)]
    out += [("psi", i + 1, y) for y in witnesses_X(g, i + 1)]
    out += [("psi", i + 2, y) for y in witnesses_X(g, i + 2)]
    return out


def _advance(
    state: TransformState, i: int, steps: Sequence[Step], progress: Callable[[SignedColoredGraph], bool]
) -> None:
    """Apply the first of ``steps`` that works, preceded by one repair if
    that is what it takes to keep local Schur positivity.  Failing that,
    accept positivity below color i+1 only."""
    g = state.graph
    repairs = _repairs(g, i)
    relaxed = None
    for step in steps:
        plans = [[step]] + [[r, step] for r in repairs if r != step]
        for plan in plans:
            h = _run(state, plan)
            if h is None or not progress(h) or not _basic_ok(h):
                continue
            if check_lsp(h) is None:
                _commit(state, plan, h)
                return
            if relaxed is None and check_lsp(h, max_color=i) is None:
                relaxed = (plan, h)
    if relaxed is None:
        kind, j, v = steps[0]
        raise TransformFailed(
            f"no admissible application of {kind} at color {j}, first witness {describe_vertex(g, v)}",
            list(state.events),
            describe_vertex(g, v),
        )
    plan, h = relaxed
    state.notes.append(f"color {i}: positivity above color {i} left to later colors after {plan[-1][0]}")
    _commit(state, plan, h)


def _commit(state: TransformState, plan: Sequence[Step], h: SignedColoredGraph) -> None:
    for kind, j, v in plan:
        state.record(kind, j, v)
    state.graph = h


def _stage(state: TransformState, i: int, budget: int) -> None:
    state.i = i
    state.remembered = state.graph
    for _ in range(budget):
        before = witnesses_W(state.graph, i)
        if not before:
            break
        _advance(
            state, i, [("phi", i, w) for w in before], lambda h, b=set(before): set(witnesses_W(h, i)) < b
        )
    else:
        raise TransformFailed(f"color {i}: type W witnesses did not run out", list(state.events))
    for _ in range(budget):
        before = witnesses_X(state.graph, i)
        if not before:
            break
        w_before = set(witnesses_W(state.graph, i))
        _advance(
            state,
            i,
            [("psi", i, x) for x in before],
            lambda h, b=set(before), wb=w_before: set(witnesses_X(h, i)) < b and set(witnesses_W(h, i)) == wb,
        )
    else:
        raise TransformFailed(f"color {i}: type C witnesses did not run out", list(state.events))
    witness = ax4_violation(state.graph, i)
    if witness is not None:
        raise TransformFailed(f"color {i}: local components still not standard: {witness}", list(state.events), witness)
    for _ in range(budget):
        bad = _first_cover_violation(state.graph, i)
        if bad is None:
            break
        g = state.graph
        chosen = regroup_component(g, i, bad)
        anchor = min(chosen, key=lambda v: _order_key(g, v))
        _advance(state, i, [("theta", i, anchor)], lambda h: ax4_violation(h, i) is None)
    else:
        raise TransformFailed(f"color {i}: covering components did not separate", list(state.events))


def _first_cover_violation(g: SignedColoredGraph, i: int) -> list[int] | None:
    for cover in connected_components(g, range(2, i + 1)):
        if ax6_violation(g, i, cover) is not None:
            return cover
    return None


def _transform_component(g: SignedColoredGraph) -> TransformState:
    state = TransformState(g.copy())
    budget = 4 * len(g) + 8
    for i in range(2, g.n):
        _stage(state, i, budget)
    return state


def transform_to_deg(g: SignedColoredGraph, check_input: bool = True) -> TransformResult:
    """Rewire a D graph into a dual equivalence graph on the same vertices
    and signatures, one connected component at a time."""
    notes: list[str] = []
    if check_input:
        report = check_axioms(g, D_GRAPH)
        if not report.passes(D_GRAPH):
            raise TransformFailed(f"input is not a D graph: fails {', '.join(report.failed())}", [], report.lines())
    out = g.copy()
    partners: dict[int, dict[int, int]] = {i: {} for i in g.colors}
    events: list[Event] = []
    for comp in connected_components(g, g.colors):
        state = _transform_component(g.subgraph(comp))
        for i in g.colors:
            for a, b in state.graph.partner_map(i).items():
                partners[i][comp[a]] = comp[b]
        for e in state.events:
            events.append(Event(len(events) + 1, e.map, e.i, e.anchor))
        notes.extend(state.notes)
    for i in g.colors:
        out.set_color(i, partners[i])
    if out.sigma != g.sigma or out.stats != g.stats:
        raise TransformFailed("vertex data changed during the transform", events)
    final = check_axioms(out, AXIOMS)
    if not final.passes():
        raise TransformFailed(f"result fails axioms {', '.join(final.failed())}", events, final.lines())
    return TransformResult(out, events, notes)


def replay(g: SignedColoredGraph, events: Sequence[Event]) -> SignedColoredGraph:
    """Apply logged maps in order, resolving anchors by vertex label."""
    h = g
    for e in events:
        v = h.index_of(e.anchor)
        if e.map == "theta":
            h = apply_theta(h, e.i, _lower_component(h, e.i, v))
        elif e.map in _APPLY:
            h = _APPLY[e.map](h, e.i, v)
        else:
            raise DomainError(f"unknown map {e.map!r}")
    return h
