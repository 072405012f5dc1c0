import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualeq.errors import DomainError, ResourceError
from dualeq.macdonald import (
    Filling,
    arm,
    attacking_pairs,
    descents,
    filling_to_tuple,
    fillings,
    inv,
    inversion_pairs,
    kostka_macdonald,
    leg,
    macdonald_qsym,
    macdonald_via_llt,
    maj,
    possible_descent_sets,
    ribbons_of_descent_set,
    row_reading_word,
)
from dualeq.poly import Q, Poly
from dualeq.shapes_tableaux import Cell, Partition, content_reading_word, partitions
from dualeq.symfunc import SchurPoly

from oracles import hook_count


def worked_filling() -> Filling:
    return Filling.from_rows([[8, 1, 13, 7, 12], [6, 3, 4, 10], [11, 14, 9, 2], [5]])


def cell_of(S: Filling, value: int) -> Cell:
    return next(c for c, v in S.entries if v == value)


def test_arm_and_leg():
    S = worked_filling()
    x = cell_of(S, 3)
    assert (arm(x, S.shape), leg(x, S.shape)) == (2, 1)
    mu = Partition.of((5, 4, 4, 1))
    assert (arm((1, 1), mu), leg((1, 1), mu)) == (4, 3)
    for corner in [(5, 1), (4, 3), (1, 4)]:
        assert (arm(corner, mu), leg(corner, mu)) == (0, 0)
    with pytest.raises(DomainError):
        arm((5, 2), mu)


def test_worked_statistics():
    S = worked_filling()
    assert {S.table()[c] for c in descents(S)} == {11, 14, 9, 3, 10}
    assert maj(S) == 8
    pairs = {(S.table()[c], S.table()[d]) for c, d in inversion_pairs(S)}
    assert pairs == {
        (11, 9), (14, 2), (9, 6), (6, 4), (10, 1), (13, 7),
        (11, 2), (14, 6), (9, 3), (4, 1), (8, 1), (13, 12),
        (14, 9), (9, 2), (6, 3), (10, 8), (8, 7),
    }
    assert inv(S) == 9


def _inversions(w):
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


@pytest.mark.parametrize("n", range(1, 6))
def test_single_row_and_column(n):
    row, col = Partition.of((n,)), Partition.of((1,) * n)
    for S in fillings(row):
        assert maj(S) == 0
        assert inv(S) == _inversions(row_reading_word(S))
    for S in fillings(col):
        assert inv(S) == 0
        w = row_reading_word(S)
        assert maj(S) == sum(j + 1 for j in range(n - 1) if w[j] > w[j + 1])
    decreasing = Filling.from_rows([[v] for v in range(n, 0, -1)])
    assert descents(decreasing) == frozenset() and maj(decreasing) == 0


def test_filling_validation():
    with pytest.raises(DomainError):
        Filling(Partition.of((2,)), ((Cell(1, 1), 1), (Cell(2, 1), 3)))
    with pytest.raises(DomainError):
        Filling(Partition.of((2,)), ((Cell(1, 1), 1),))


def test_attacking_pairs_count():
    mu = Partition.of((3, 2))
    # three pairs in row 1, one in row 2, and one across the rows
    assert len(attacking_pairs(mu)) == 3 + 1 + 1


def test_worked_ribbons():
    S = worked_filling()
    shape, a, m = ribbons_of_descent_set(S.shape, descents(S))
    assert [str(s) for s in shape.components] == ["3,3,3,2/3,3,1", "1,1,1", "2,2,1/2", "2,2,2/2,1", "1"]
    assert m == maj(S)


def test_ribbon_extremes():
    mu = Partition.of((3, 2, 2))
    shape, a, m = ribbons_of_descent_set(mu, [])
    assert (a, m) == (0, 0)
    assert all(len({c.row for c in s.cells}) == 1 for s in shape.components)
    upper = [c for c in mu.cells() if c.row > 1]
    shape, _, _ = ribbons_of_descent_set(mu, upper)
    assert all(len({c.col for c in s.cells}) == 1 for s in shape.components)
    with pytest.raises(DomainError):
        ribbons_of_descent_set(mu, [(1, 1)])


@pytest.mark.parametrize("parts", [(2, 2), (3, 1), (2, 1, 1), (3, 2)])
def test_filling_to_tuple_keeps_reading_order(parts):
    mu = Partition.of(parts)
    for S in itertools.islice(fillings(mu), 40):
        t = filling_to_tuple(S)
        shape, _, _ = ribbons_of_descent_set(mu, descents(S))
        assert t.shape == shape
        assert sorted(content_reading_word(t)) == list(range(1, mu.size + 1))


def test_small_macdonald_tables():
    assert kostka_macdonald(Partition.of((1,))) == SchurPoly(1, {Partition.of((1,)): 1})
    assert kostka_macdonald(Partition.of((2,))) == SchurPoly(
        2, {Partition.of((2,)): 1, Partition.of((1, 1)): Q}
    )
    table = kostka_macdonald(Partition.of((2, 1)))
    assert table.at_one() == {Partition.of((3,)): 1, Partition.of((2, 1)): 2, Partition.of((1, 1, 1)): 1}


def test_two_by_two_via_ribbons():
    mu = Partition.of((2, 2))
    assert macdonald_via_llt(mu) == macdonald_qsym(mu)


@pytest.mark.parametrize("n", range(1, 5))
def test_single_row_has_no_t(n):
    mu = Partition.of((n,))
    assert possible_descent_sets(mu) == [frozenset()]
    for _, c in macdonald_qsym(mu).items():
        assert all(b == 0 for (_, b), _ in c.items())


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_coefficients_at_one_count_tableaux(mu):
    table = kostka_macdonald(mu)
    assert table.is_nonnegative()
    for lam, value in table.at_one().items():
        assert value == hook_count(lam.parts)


def test_conjugate_swaps_q_and_t():
    # a known symmetry, used only as a consistency check
    mu = Partition.of((2, 1, 1))
    a = kostka_macdonald(mu)
    b = kostka_macdonald(mu.conjugate())
    swap = lambda c: Poly({(t, q): m for (q, t), m in c.items()})
    assert {lam: swap(c) for lam, c in a.terms.items()} == b.terms


def test_size_guard():
    with pytest.raises(ResourceError):
        next(fillings(Partition.of((4, 4)), max_size=7))
    with pytest.raises(ResourceError):
        macdonald_via_llt(Partition.of((4, 4)), max_size=7)
