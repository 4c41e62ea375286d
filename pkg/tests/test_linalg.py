from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seaweed_slices.linalg import Matrix, in_span, intersect_subspaces, kernel_basis, rank, rank_of_rows, rref, span_basis


def det(rows):
    # Leibniz expansion; independent of any elimination code
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def rank_by_minors(rows, ncols):
    nrows = len(rows)
    for k in range(min(nrows, ncols), 0, -1):
        for ri in combinations(range(nrows), k):
            for ci in combinations(range(ncols), k):
                if det([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


small = st.integers(-4, 4).map(Fraction) | st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, cols=c)


def test_rank_examples():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zeros(3, 4)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)) == []
    assert len(kernel_basis(Matrix.zeros(2, 3))) == 3
    row = Matrix.from_rows([[1, 1, 0]])
    ker = kernel_basis(row)
    assert len(ker) == 2
    for v in ker:
        assert row.apply(v) == (0,)
    assert rank_of_rows(ker) == 2


def test_intersection_examples():
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert intersect_subspaces([e1], [e2]) == []
    meet = intersect_subspaces([e1, e2], [e2, e3])
    assert len(meet) == 1 and in_span(e2, meet)
    a = [(1, 2, 3), (0, 1, 1)]
    meet = intersect_subspaces(a, a)
    assert len(meet) == 2 and all(in_span(v, a) for v in meet)


def test_intersection_dimension_mismatch():
    with pytest.raises(ValueError):
        intersect_subspaces([(1, 0)], [(1, 0, 0)])


def test_matrix_shape_invariant():
    with pytest.raises(ValueError):
        Matrix(2, 2, ((Fraction(1), Fraction(0)),))


def test_entries_stay_in_lowest_terms():
    m = Matrix.from_rows([[Fraction(2, 4), Fraction(-3, 6)]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2
    assert m[0, 1].denominator > 0


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(m):
    assert rank(m) == rank_by_minors(m.entries, m.cols)


@settings(max_examples=150, deadline=None)
@given(matrices(max_rows=5, max_cols=5))
def test_bareiss_and_gauss_agree(m):
    reduced, pivots = rref(m.entries, m.cols)
    assert rank(m) == len(pivots) == len(reduced)


@settings(max_examples=150, deadline=None)
@given(matrices(max_rows=5, max_cols=5))
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert not any(m.apply(v))


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_intersection_symmetric_and_dimension_formula(a, b):
    if a.cols != b.cols:
        return
    A, B = list(a.entries), list(b.entries)
    ab, ba = intersect_subspaces(A, B), intersect_subspaces(B, A)
    assert len(ab) == len(ba)
    assert all(in_span(v, ba) for v in ab)
    assert all(in_span(v, A) and in_span(v, B) for v in ab)
    dim_sum = rank_of_rows(A + B)
    assert len(ab) == rank_of_rows(A) + rank_of_rows(B) - dim_sum


@settings(max_examples=100, deadline=None)
@given(matrices(), st.lists(st.integers(1, 7) | st.integers(-7, -1), min_size=4, max_size=4))
def test_row_scaling_invariance(m, scales):
    scaled = Matrix.from_rows([[x * s for x in row] for row, s in zip(m.entries, scales)], cols=m.cols)
    assert rank(scaled) == rank(m)
    assert len(kernel_basis(scaled)) == len(kernel_basis(m))
    assert span_basis(scaled.entries) == span_basis(m.entries)
