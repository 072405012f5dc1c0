import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualeq.errors import DomainError, ResourceError
from dualeq.shapes_tableaux import (
    Cell,
    Partition,
    SkewShape,
    StandardTupleTableau,
    TupleShape,
    content,
    content_reading_word,
    descent_signature,
    dominance_leq,
    enumerate_standard,
    parse_signature,
    parse_skew_shape,
    parse_tuple_shape,
    partition_signature,
    partitions,
    runs_composition,
    shifted_content,
    shifted_contents,
    signature_str,
)

from oracles import hook_count, partitions_of, standard_fillings

C = Cell


def worked_tuple() -> StandardTupleTableau:
    """The standard 4-tuple of shape ((3,2), (2,1), empty, (2,2,1)/(1))."""
    shape = TupleShape.of((3, 2), (2, 1), (), SkewShape(Partition.of((2, 2, 1)), Partition.of((1,))))
    return StandardTupleTableau(
        shape,
        (
            ((C(1, 1), 2), (C(2, 1), 6), (C(3, 1), 10), (C(1, 2), 7), (C(2, 2), 11)),
            ((C(1, 1), 1), (C(2, 1), 12), (C(1, 2), 8)),
            (),
            ((C(2, 1), 4), (C(1, 2), 3), (C(2, 2), 5), (C(1, 3), 9)),
        ),
    )


partition_st = st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(partitions(n))))
perm_st = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1)))


def test_content_examples():
    shape = SkewShape.straight((5, 4, 4, 1))
    assert content(C(1, 1), shape) == 0
    assert content(C(5, 1), shape) == 4
    assert content(C(1, 4), shape) == -3


def test_content_outside_shape():
    with pytest.raises(DomainError):
        content(C(3, 3), SkewShape.straight((2, 1)))


def test_shifted_content_examples():
    assert shifted_content(C(1, 1), 0, 4) == 0
    assert shifted_content(C(2, 1), 3, 4) == 7
    with pytest.raises(DomainError):
        shifted_content(C(1, 1), 4, 4)


def test_offset_shifts_content():
    shape = SkewShape(Partition.of((2,)), Partition(), (3, 1))
    assert content(C(1, 1), shape) == 2


def test_worked_tuple_reading_word():
    t = worked_tuple()
    assert content_reading_word(t) == (9, 7, 8, 3, 2, 11, 1, 5, 6, 12, 4, 10)


def test_worked_tuple_shifted_contents_sorted():
    c = shifted_contents(worked_tuple().shape)
    assert list(c) == sorted(c) and len(c) == 12


def test_first_tableau_reading_word():
    t = StandardTupleTableau(
        TupleShape.of((3, 2)), (((C(1, 1), 1), (C(2, 1), 2), (C(3, 1), 5), (C(1, 2), 3), (C(2, 2), 4)),)
    )
    assert content_reading_word(t) == (3, 1, 4, 2, 5)
    assert descent_signature(content_reading_word(t)) == parse_signature("+-++")


def test_single_row_reading_word():
    t = enumerate_standard(TupleShape.of((4,)))[0]
    assert content_reading_word(t) == (1, 2, 3, 4)


def test_descent_signature_extremes():
    assert descent_signature((1, 2, 3, 4)) == (1, 1, 1)
    assert descent_signature((4, 3, 2, 1)) == (-1, -1, -1)


def test_enumerate_counts():
    assert len(enumerate_standard(TupleShape.of((3, 2)))) == 5
    assert len(enumerate_standard(TupleShape.of((5,)))) == 1
    assert len(enumerate_standard(TupleShape.of((3, 2, 1)))) == 16


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_matches_hook_formula(n):
    for lam in partitions(n):
        assert len(enumerate_standard(TupleShape.of(lam.parts))) == hook_count(lam.parts)


@pytest.mark.parametrize(
    "outer,inner", [((3, 2), (1,)), ((2, 2, 1), (1,)), ((3, 3, 1), (2, 1)), ((4, 2), (2,))]
)
def test_enumerate_skew_matches_brute_force(outer, inner):
    shape = TupleShape((SkewShape(Partition.of(outer), Partition.of(inner)),))
    assert len(enumerate_standard(shape)) == len(standard_fillings(outer, inner))


def test_enumerate_resource_bound():
    with pytest.raises(ResourceError):
        enumerate_standard(TupleShape.of((3, 3)), max_size=5)


def test_dominance_examples():
    assert dominance_leq(Partition.of((2, 2, 1)), Partition.of((3, 2)))
    a, b = Partition.of((3, 3)), Partition.of((4, 1, 1))
    assert not dominance_leq(a, b) and not dominance_leq(b, a)
    with pytest.raises(DomainError):
        dominance_leq(Partition.of((2,)), Partition.of((1,)))


@pytest.mark.parametrize("n", range(1, 7))
def test_row_dominates_everything(n):
    top = Partition.of((n,))
    assert all(dominance_leq(lam, top) for lam in partitions(n))


def test_runs_composition_examples():
    assert runs_composition((1, 1, 1, 1)).parts == (5,)
    assert runs_composition(parse_signature("+-+-")).parts == (2, 2, 1)


@given(partition_st)
def test_runs_of_partition_signature(lam):
    if lam.size == 0:
        return
    assert runs_composition(partition_signature(lam)).to_partition() == lam


@given(partition_st)
def test_partitions_are_reverse_lex(lam):
    n = lam.size
    assert [p.parts for p in partitions(n)] == partitions_of(n)


@given(perm_st)
def test_descent_signature_reverse(w):
    sig = descent_signature(w)
    assert descent_signature(tuple(reversed(w))) == tuple(-s for s in sig)


@given(st.lists(st.sampled_from([1, -1]), max_size=8))
def test_signature_text_round_trip(sig):
    assert parse_signature(signature_str(sig)) == tuple(sig)


def test_parse_signature_rejects_junk():
    with pytest.raises(DomainError):
        parse_signature("+x-")


def test_parse_shapes():
    ts = parse_tuple_shape("3,2/0@0,0;2,1/1@0,0")
    assert ts.k == 2 and ts.size == 7
    assert parse_skew_shape("2,1") == SkewShape.straight((2, 1))
    assert parse_skew_shape("3/1@2,1").offset == (2, 1)
    with pytest.raises(DomainError):
        parse_skew_shape("3,a")
    with pytest.raises(DomainError):
        parse_skew_shape("2/3")


@given(partition_st, partition_st)
def test_skew_shape_text_round_trip(a, b):
    if any(i >= len(a) or b[i] > a[i] for i in range(len(b))):
        return
    shape = SkewShape(a, b)
    assert parse_skew_shape(str(shape)) == shape


def test_from_cells_canonical():
    cells = [(3, 2), (4, 2), (3, 3)]
    shape = SkewShape.from_cells(cells)
    contents = sorted(c - r for c, r in cells)
    assert sorted(content(x, shape) for x in shape.cells) == contents


def test_standard_validation():
    shape = TupleShape.of((2,))
    with pytest.raises(DomainError):
        StandardTupleTableau(shape, (((C(1, 1), 2), (C(2, 1), 1)),))
    with pytest.raises(DomainError):
        StandardTupleTableau(shape, (((C(1, 1), 1),),))


@pytest.mark.parametrize("shapes", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,))])
def test_tuple_enumeration_count(shapes):
    shape = TupleShape.of(*shapes)
    n = shape.size
    expected = 1
    for lam in shapes:
        expected *= hook_count(lam)
    sizes = [sum(lam) for lam in shapes]
    expected *= len(set(itertools.permutations([j for j, s in enumerate(sizes) for _ in range(s)])))
    assert len(enumerate_standard(shape)) == expected
    words = {content_reading_word(t) for t in enumerate_standard(shape)}
    assert len(words) == expected and all(sorted(w) == list(range(1, n + 1)) for w in words)
