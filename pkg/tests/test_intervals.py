import math

import pytest
from hypothesis import given, strategies as st

from petring.intervals import (
    IndexSet,
    all_index_sets,
    codim_omegaj,
    decompose,
    dim_xj,
    factor_ranks,
    hessenberg_function,
    intersects_dual,
    m_factor,
)


@st.composite
def index_sets(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    if n == 1:
        return IndexSet(n)
    return IndexSet(n, draw(st.frozensets(st.integers(1, n - 1))))


class TestIndexSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            IndexSet(3, frozenset({3}))
        with pytest.raises(ValueError):
            IndexSet(0)
        with pytest.raises(ValueError):
            IndexSet(33)
        assert IndexSet(1).members == frozenset()

    def test_parse_format_round_trip(self):
        assert IndexSet.parse("-", 4) == IndexSet(4)
        assert IndexSet.parse("1,3", 4).as_tuple() == (1, 3)
        assert IndexSet.parse("1,3", 4).format() == "1,3"
        assert IndexSet(4).format() == "-"
        with pytest.raises(ValueError):
            IndexSet.parse("3,1", 4)
        with pytest.raises(ValueError):
            IndexSet.parse("1,1", 4)
        with pytest.raises(ValueError):
            IndexSet.parse("x", 4)

    def test_rank_mismatch_rejected(self):
        with pytest.raises(ValueError):
            IndexSet.of(4, [1]).union(IndexSet.of(5, [1]))

    def test_canonical_order(self):
        masks = [J.mask for J in all_index_sets(4)]
        assert masks == list(range(8))


class TestDecompose:
    def test_three_runs(self):
        dec = decompose(IndexSet.of(10, [1, 2, 4, 5, 6, 9]))
        assert dec.runs == ((1, 2), (4, 6), (9, 9))

    def test_empty(self):
        assert decompose(IndexSet(5)).runs == ()

    def test_two_runs(self):
        assert decompose(IndexSet.of(9, [2, 3, 4, 7, 8])).runs == ((2, 4), (7, 8))

    @given(index_sets())
    def test_runs_reconstruct(self, J):
        dec = decompose(J)
        rebuilt = set()
        for lo, hi in dec.runs:
            rebuilt.update(range(lo, hi + 1))
        assert rebuilt == set(J.members)
        assert sum(hi - lo + 1 for lo, hi in dec.runs) == len(J)
        # runs ascending and non-adjacent
        for (_, h1), (l2, _) in zip(dec.runs, dec.runs[1:]):
            assert h1 + 1 < l2


class TestMFactor:
    @pytest.mark.parametrize(
        "n,members,expected",
        [(9, [2, 3, 4, 7, 8], 12), (5, [], 1), (10, [1, 3, 5, 6, 7], 6)],
    )
    def test_examples(self, n, members, expected):
        assert m_factor(IndexSet.of(n, members)) == expected

    @given(index_sets())
    def test_divides_full_factorial(self, J):
        assert math.factorial(len(J)) % m_factor(J) == 0


class TestHessenbergFunction:
    def test_example(self):
        J = IndexSet.of(10, [1, 2, 4, 5, 6, 9])
        assert hessenberg_function(J) == [2, 3, 3, 5, 6, 7, 7, 8, 10, 10]

    def test_identity_and_staircase(self):
        assert hessenberg_function(IndexSet(3)) == [1, 2, 3]
        assert hessenberg_function(IndexSet.of(4, [1, 2, 3])) == [2, 3, 4, 4]

    @given(index_sets())
    def test_axioms(self, J):
        h = hessenberg_function(J)
        assert all(h[i] <= h[i + 1] for i in range(len(h) - 1))
        assert all(h[i - 1] >= i for i in range(1, J.n + 1))
        assert h[-1] == J.n


class TestFactorRanks:
    def test_examples(self):
        assert factor_ranks(IndexSet.of(10, [1, 2, 4, 5, 6, 9])) == [3, 4, 2]
        assert factor_ranks(IndexSet(6)) == []
        assert factor_ranks(IndexSet.of(5, [2, 3])) == [3]


class TestIntersectsDual:
    def test_examples(self):
        assert intersects_dual(IndexSet.of(4, [2, 3]), IndexSet.of(4, [2]))
        assert not intersects_dual(IndexSet.of(5, [2]), IndexSet.of(5, [3]))
        assert intersects_dual(IndexSet.of(3, [1]), IndexSet.of(3, [1]))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            intersects_dual(IndexSet.of(4, [1]), IndexSet.of(5, [1]))

    def test_monotone(self):
        n = 7
        for J in all_index_sets(n):
            for Jp in all_index_sets(n):
                hit = intersects_dual(J, Jp)
                for extra in range(1, n):
                    if hit:
                        # enlarging J preserves true
                        assert intersects_dual(IndexSet(n, J.members | {extra}), Jp)
                    else:
                        # enlarging Jp preserves false
                        assert not intersects_dual(J, IndexSet(n, Jp.members | {extra}))


class TestDimensions:
    def test_examples(self):
        assert dim_xj(IndexSet.of(8, [1, 3, 5, 6, 7])) == 5
        assert dim_xj(IndexSet(4)) == 0
        assert codim_omegaj(IndexSet.full(6)) == 5

    @given(index_sets())
    def test_both_equal_cardinality(self, J):
        assert dim_xj(J) == codim_omegaj(J) == len(J)
