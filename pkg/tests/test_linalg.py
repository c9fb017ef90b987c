"""Exact elimination, kernels, span comparisons, and the sparse reducer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qdual.linalg import (
    LinAlgError,
    SpanReducer,
    dedupe_rows,
    echelon,
    in_span,
    integer_row,
    kernel_basis,
    monic,
    proportional,
    rank,
    span_equal,
)

H = Fraction(1, 2)

frac = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda nc: st.tuples(
            st.just(nc),
            st.lists(
                st.lists(frac, min_size=nc, max_size=nc),
                min_size=0,
                max_size=max_rows,
            ),
        )
    )


def mat_vec(rows, x, ncols):
    return [
        sum((Fraction(r[j]) * x[j] for j in range(ncols)), Fraction(0))
        for r in rows
    ]


def test_integer_row_scaling():
    assert integer_row([H, Fraction(1, 3)]) == [3, 2]
    assert integer_row([Fraction(2), Fraction(4)]) == [1, 2]
    assert integer_row([0, 0]) == [0, 0]


def test_echelon_shape_and_rank():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    mat, pivots = echelon(rows, 3)
    assert pivots == [0, 1]
    assert rank(rows, 3) == 2
    assert rank([], 3) == 0


def test_echelon_rejects_ragged_rows():
    with pytest.raises(LinAlgError):
        echelon([[1, 2], [1, 2, 3]], 2)


def test_kernel_of_known_matrix():
    rows = [[1, 0, -1], [0, 1, 2]]
    kern = kernel_basis(rows, 3)
    assert kern == [(Fraction(1), Fraction(-2), Fraction(1))]


def test_kernel_of_zero_matrix_is_identity():
    kern = kernel_basis([], 3)
    assert len(kern) == 3
    for t, vec in enumerate(kern):
        assert vec[t] == 1
        assert sum(1 for x in vec if x) == 1


def test_monic_and_proportional():
    assert monic([0, 2, 4]) == (0, 1, 2)
    with pytest.raises(LinAlgError):
        monic([0, 0])
    assert proportional([2, 4], [3, 6])
    assert not proportional([2, 4], [3, 7])
    assert not proportional([0, 1], [1, 0])


def test_span_equal_and_membership():
    a = [[1, 0], [0, 1]]
    b = [[1, 1], [1, -1]]
    assert span_equal(a, b, 2)
    assert in_span(b, [5, 3], 2)
    assert not span_equal(a, [[1, 1]], 2)
    assert not in_span([[1, 1]], [1, 0], 2)


def test_dedupe_rows_drops_parallel_and_zero():
    rows = [[1, 2], [2, 4], [-1, -2], [0, 0], [1, 0]]
    kept = dedupe_rows(rows)
    assert kept == [[1, 2], [1, 0]]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(data):
    ncols, rows = data
    for vec in kernel_basis(rows, ncols):
        assert all(v == 0 for v in mat_vec(rows, vec, ncols))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_plus_nullity(data):
    ncols, rows = data
    assert rank(rows, ncols) + len(kernel_basis(rows, ncols)) == ncols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_plain_gaussian(data):
    """Bareiss must agree with a naive Fraction Gaussian elimination."""
    ncols, rows = data
    mat = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for col in range(ncols):
        piv = next((t for t in range(r, len(mat)) if mat[t][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for t in range(len(mat)):
            if t != r and mat[t][col]:
                c = mat[t][col] / mat[r][col]
                mat[t] = [a - c * b for a, b in zip(mat[t], mat[r])]
        r += 1
    assert rank(rows, ncols) == r


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_reducer_matches_dense_rank(data):
    ncols, rows = data
    red = SpanReducer()
    for r in rows:
        red.add({j: x for j, x in enumerate(r) if x})
    assert red.dim == rank(rows, ncols)
    for r in rows:
        assert red.contains({j: x for j, x in enumerate(r) if x})


def test_reducer_rows_fully_reduced():
    red = SpanReducer()
    red.add({1: Fraction(2), 2: Fraction(2)})
    red.add({0: Fraction(1), 1: Fraction(1)})
    pivots = [p for p, _ in red.rows]
    assert pivots == sorted(pivots)
    for p, row in red.rows:
        assert row[p] == 1
        for other, _ in red.rows:
            if other != p:
                assert other not in row


def test_reducer_add_reports_novelty():
    red = SpanReducer()
    assert red.add({0: Fraction(1)})
    assert not red.add({0: Fraction(7)})
    assert red.add({0: Fraction(1), 1: Fraction(1)})
    assert red.dim == 2
    assert not red.contains({2: Fraction(1)})
    assert red.contains({})
