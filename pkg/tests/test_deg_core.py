import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualeq import fixtures
from dualeq.axioms import AXIOMS, BASIC, D_GRAPH, check_axioms, is_d_graph
from dualeq.deg_core import (
    SignedColoredGraph,
    build_standard_deg,
    component_shape,
    connected_components,
    elementary_dual_equivalence,
    find_isomorphism,
    generating_function,
    i_package,
    i_type,
    package_key,
)
from dualeq.errors import DomainError
from dualeq.shapes_tableaux import Partition, partitions
from dualeq.symfunc import schur_qsym

from oracles import hook_count

perm_st = st.integers(3, 7).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


def edge_multiset(g: SignedColoredGraph) -> list:
    out = []
    for i in g.colors:
        for a, b in g.edges(i):
            out.append((i, tuple(sorted((g.sigma[a], g.sigma[b])))))
    return sorted(out)


def test_elementary_examples():
    assert elementary_dual_equivalence((1, 2, 3), 2) == (1, 2, 3)
    assert elementary_dual_equivalence((2, 1, 3), 2) == (3, 1, 2)


@pytest.mark.parametrize("i", [2, 3, 4])
def test_elementary_is_an_involution(i):
    for w in itertools.permutations(range(1, 6)):
        assert elementary_dual_equivalence(elementary_dual_equivalence(w, i), i) == w


@given(perm_st, st.data())
def test_elementary_moves_only_neighbors(w, data):
    i = data.draw(st.integers(2, len(w) - 1))
    x = elementary_dual_equivalence(w, i)
    moved = {a for a, b in zip(w, x) if a != b}
    assert moved <= {i - 1, i, i + 1}
    assert len(moved) in (0, 2)


def test_hand_drawn_standard_graphs():
    for parts, drawn in fixtures.standard_examples().items():
        built = build_standard_deg(parts)
        assert len(built) == len(drawn)
        assert edge_multiset(built) == edge_multiset(drawn)
        assert find_isomorphism(drawn, built) is not None


def test_two_row_graph_edges():
    g = build_standard_deg((3, 2))
    assert len(g) == 5
    assert sorted(len(g.edges(i)) for i in g.colors) == [2, 2, 2]


def test_row_graph_is_a_point():
    g = build_standard_deg((4,))
    assert len(g) == 1 and g.edge_count() == 0


def test_invalid_augmentation():
    with pytest.raises(DomainError):
        build_standard_deg((2, 1), {(1, 1): 4})


def test_augmented_graph_type():
    g = build_standard_deg((2, 1), {(3, 1): 4})
    assert (g.n, g.N) == (3, 4) and len(g) == 2
    assert check_axioms(g).passes()


def test_restrictions():
    g = build_standard_deg((3, 2))
    assert g.restrict(g.n, g.N).all_edges() == g.all_edges()
    r = g.restrict(2, 5)
    assert len(r) == 5 and r.edge_count() == 0


def test_restriction_of_three_two_one():
    g = build_standard_deg((3, 2, 1)).restrict(5, 6)
    comps = connected_components(g, g.colors)
    assert sorted(len(c) for c in comps) == [5, 5, 6]
    shapes = {component_shape(g.restrict(5, 5), c).parts for c in comps}
    assert shapes == {(3, 2), (3, 1, 1), (2, 2, 1)}
    cover = fixtures.double_cover_graph().restrict(5, 6)
    assert sorted(len(c) for c in connected_components(cover, cover.colors)) == [5, 5, 5, 5, 6, 6]


def test_components():
    g = build_standard_deg((3, 2))
    assert connected_components(g, []) == [[v] for v in g.vertices]
    assert len(connected_components(g, g.colors)) == 1
    assert len(connected_components(fixtures.double_cover_graph(), range(2, 6))) == 1


def test_box_component_is_not_standard():
    box = fixtures.box_graph()
    assert component_shape(box, list(box.vertices)) is None
    assert component_shape(build_standard_deg((3, 2)), range(5)) == Partition.of((3, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_graphs_are_pairwise_distinct(n):
    lams = list(partitions(n))
    graphs = {lam: build_standard_deg(lam) for lam in lams}
    for a, b in itertools.combinations(lams, 2):
        assert find_isomorphism(graphs[a], graphs[b]) is None
    for lam in lams:
        assert find_isomorphism(graphs[lam], graphs[lam]) == {v: v for v in graphs[lam].vertices}


def test_domino_component_is_standard():
    assert find_isomorphism(fixtures.domino_graph(), build_standard_deg((4, 2))) is not None


def test_small_packages_are_points():
    g = build_standard_deg((3, 2))
    for v in g.vertices:
        for i in (3, 4):
            assert i_package(g, v, i) == [v]


def test_packages_match_along_top_edges():
    g = build_standard_deg((3, 2, 1))
    key = package_key(g, 5)
    for a, b in g.edges(5):
        pa, pb = i_package(g, a, 5), i_package(g, b, 5)
        assert len(pa) == len(pb)
        assert sorted(map(key, pa)) == sorted(map(key, pb))


def _between(w, a, b, x):
    pos = {v: p for p, v in enumerate(w)}
    return min(pos[a], pos[b]) < pos[x] < max(pos[a], pos[b])


@pytest.mark.parametrize("lam", [(3, 2, 1), (4, 2), (3, 3), (2, 2, 1, 1), (4, 1, 1)])
def test_types_in_standard_graphs(lam):
    g = build_standard_deg(lam)
    for v in g.vertices:
        w = g.words[v]
        for i in range(3, g.n):
            kind = i_type(g, v, i)
            assert kind in "WABC"
            w_like = _between(w, i - 1, i, i - 2) and _between(w, i - 1, i, i + 1)
            assert (kind == "W") == w_like


@pytest.mark.parametrize("n", [5, 6, 7])
def test_no_c_type_on_packages_of_w_type(n):
    for lam in partitions(n):
        g = build_standard_deg(lam)
        for i in range(3, n):
            r = g.restrict(i, n)
            for v in r.vertices:
                if i_type(r, v, i) == "W":
                    assert all(i_type(r, u, i) != "C" for u in i_package(r, v, i))


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_generating_function(n):
    for lam in partitions(n):
        g = build_standard_deg(lam)
        assert len(g) == hook_count(lam.parts)
        assert generating_function(g, statistic=None) == schur_qsym(lam)


def test_generating_function_needs_statistic():
    with pytest.raises(DomainError):
        generating_function(build_standard_deg((2, 1)))
    empty = generating_function(build_standard_deg((2, 1)), component=[], statistic=None)
    assert not empty


def test_graph_validation():
    with pytest.raises(DomainError):
        SignedColoredGraph(4, 3, [])
    with pytest.raises(DomainError):
        SignedColoredGraph(3, 3, [(1, 0)])
    with pytest.raises(DomainError):
        SignedColoredGraph(3, 3, [(1, 1), (1, -1)], labels=["a", "a"])


# axioms


def test_report_lines():
    report = check_axioms(fixtures.non_standard_graph())
    assert report.failed() == ["4", "6"]
    assert any(line.startswith("axiom 4: fails") for line in report.lines())
    assert report.witnesses["4"]


def test_fixture_verdicts():
    cases = {
        "double_cover_graph": ["6"],
        "domino_graph": [],
        "non_standard_graph": ["4", "6"],
        "box_graph": ["4", "6"],
        "frog_graph": ["4", "6"],
        "box_graph_repaired": [],
        "frog_graph_repaired": [],
    }
    for name, failing in cases.items():
        g = getattr(fixtures, name)()
        assert check_axioms(g).failed() == failing, name


def test_d_graph_fixtures():
    for name in ("box_graph", "frog_graph", "non_standard_graph", "double_cover_graph"):
        assert is_d_graph(getattr(fixtures, name)()), name
    assert not is_d_graph(fixtures.fails_4b_graph())


def test_axiom_names():
    assert set(BASIC) <= set(D_GRAPH) <= set(AXIOMS)


def test_broken_signature_caught():
    g = build_standard_deg((2, 1)).copy()
    g.sigma[0] = tuple(-s for s in g.sigma[0])
    assert not check_axioms(g, BASIC).passes()


def test_fixtures_are_fresh_copies():
    a = fixtures.fails_4c_graph()
    a.set_color(2, {})
    assert fixtures.fails_4c_graph().edge_count() > a.edge_count()
