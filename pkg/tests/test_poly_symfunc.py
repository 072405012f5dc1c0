import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualeq import fixtures
from dualeq.deg_core import generating_function
from dualeq.errors import DomainError, NotSchurPositive
from dualeq.poly import ONE, Q, T, Poly
from dualeq.shapes_tableaux import Partition, parse_signature, partitions
from dualeq.symfunc import (
    QSymAggregate,
    Ribbon,
    SchurPoly,
    all_ribbons,
    extract_schur,
    ribbon_maj,
    ribbon_schur_qsym,
    schur_qsym,
)

from oracles import hook_count, schur_product

monomials = st.tuples(st.integers(-2, 4), st.integers(0, 4))
polys = st.dictionaries(monomials, st.integers(-3, 3), max_size=5).map(Poly)
partition_st = st.integers(1, 6).flatmap(lambda n: st.sampled_from(list(partitions(n))))


def sig(text):
    return parse_signature(text)


def schur(*pairs, degree):
    return SchurPoly(degree, {Partition.of(lam): c for lam, c in pairs})


@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()
    assert a * ONE == a


@given(polys)
def test_poly_json_round_trip(a):
    assert Poly.from_json(a.to_json()) == a


@given(polys, st.integers(-2, 2), st.integers(0, 2))
def test_shift_is_multiplication(a, i, j):
    assert a.shift(i, j) == a * Poly.monomial(i, j)


@given(polys, polys)
def test_at_one_is_a_ring_map(a, b):
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a + b).at_one() == a.at_one() + b.at_one()


def test_poly_render_order():
    assert str(Q + T) == "q + t"
    assert str(Q * T + Q * Q * T + Q * T * T) == "q*t + q^2*t + q*t^2"
    assert str(Poly()) == "0"
    assert str(Poly.monomial(2, 0, -3) + 1) == "1 - 3*q^2"


def test_schur_qsym_two_row():
    expected = QSymAggregate(5, {sig(s): 1 for s in ("+-++", "-+-+", "-++-", "+-+-", "++-+")})
    assert schur_qsym(Partition.of((3, 2))) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_qsym_row_and_column(n):
    assert schur_qsym(Partition.of((n,))) == QSymAggregate(n, {(1,) * (n - 1): 1})
    assert schur_qsym(Partition.of((1,) * n)) == QSymAggregate(n, {(-1,) * (n - 1): 1})


@pytest.mark.parametrize("n", range(1, 8))
def test_extract_round_trip(n):
    for lam in partitions(n):
        assert extract_schur(schur_qsym(lam)) == schur(((lam.parts), 1), degree=n)


@given(partition_st)
def test_schur_qsym_total_is_hook_count(lam):
    assert sum(c.at_one() for _, c in schur_qsym(lam).items()) == hook_count(lam.parts)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.sampled_from(list(partitions(n))), min_size=1, max_size=3)),
       st.lists(polys.filter(lambda p: p.is_nonnegative() and not p.has_negative_exponent()), min_size=3, max_size=3))
def test_extract_inverts_linear_combinations(lams, coeffs):
    n = lams[0].size
    combo = SchurPoly(n, {lam: c for lam, c in zip(lams, coeffs)})
    assert extract_schur(combo.to_qsym()) == combo


def test_box_and_non_standard_aggregates():
    box = fixtures.box_graph()
    assert extract_schur(generating_function(box, statistic=None)) == schur(
        ((3, 2), 1), ((3, 1, 1), 1), ((2, 2, 1), 1), degree=5
    )
    odd = fixtures.non_standard_graph()
    assert extract_schur(generating_function(odd, statistic=None)) == schur(((3, 2), 1), ((4, 1), 1), degree=5)


def test_extract_detects_non_positive():
    with pytest.raises(NotSchurPositive) as info:
        extract_schur(QSymAggregate(3, {sig("-+"): 1}))
    assert info.value.signature == sig("-+")
    # s[2,1] needs both signatures; one alone leaves a negative term
    with pytest.raises(NotSchurPositive) as info:
        extract_schur(QSymAggregate(3, {sig("+-"): 1}))
    assert info.value.signature == sig("-+")
    with pytest.raises(NotSchurPositive):
        extract_schur(QSymAggregate(3, {sig("++"): 1, sig("-+"): -1}))


def test_ribbon_maj_examples():
    assert ribbon_maj(Ribbon(5)) == 0
    assert ribbon_maj(Ribbon(5, frozenset(range(1, 5)))) == 10
    assert ribbon_maj(Ribbon(4, frozenset({1, 3}))) == 4
    with pytest.raises(DomainError):
        Ribbon(3, frozenset({3}))


@pytest.mark.parametrize("n", range(1, 6))
def test_ribbon_extremes(n):
    assert ribbon_schur_qsym(Ribbon(n)) == schur_qsym(Partition.of((n,)))
    assert ribbon_schur_qsym(Ribbon(n, frozenset(range(1, n)))) == schur_qsym(Partition.of((1,) * n))


def test_ribbon_with_one_descent():
    assert extract_schur(ribbon_schur_qsym(Ribbon(5, frozenset({2})))) == schur(((3, 2), 1), ((4, 1), 1), degree=5)


@pytest.mark.parametrize("n", range(2, 6))
def test_ribbons_against_monomial_oracle(n):
    # a ribbon is the skew shape whose rows are the runs between descents
    for nu in all_ribbons(n):
        cuts = [0] + sorted(nu.descents) + [n]
        rows = [cuts[j + 1] - cuts[j] for j in range(len(cuts) - 1)]
        # rows listed bottom to top; first row leftmost
        outer, inner, start = [], [], 0
        for length in rows:
            outer.append(start + length)
            inner.append(start)
            start += length - 1
        outer.reverse()
        inner.reverse()
        expected = schur_product([(tuple(outer), tuple(inner))])
        got = extract_schur(ribbon_schur_qsym(nu))
        assert {lam.parts: c.at_one() for lam, c in got.terms.items()} == expected


def test_schur_render():
    f = schur(((3, 1), Q), ((2, 1, 1), Q * Q), degree=4)
    assert f.render() == "q*s[3,1] + q^2*s[2,1,1]"
    g = schur(((1, 1, 1), Q * T), ((2, 1), Q + T), ((3,), 1), degree=3)
    assert str(g) == "s[3] + (q + t)*s[2,1] + q*t*s[1,1,1]"
    assert str(SchurPoly(2)) == "0"
    assert str(schur(((2, 1), 2 * Q), ((1, 1, 1), -Q), degree=3)) == "2*q*s[2,1] + (-q)*s[1,1,1]"


def test_schur_degree_mismatch():
    with pytest.raises(DomainError):
        SchurPoly(3, {Partition.of((2,)): 1})
    with pytest.raises(DomainError):
        QSymAggregate(3, {(1,): 1})
