import random

import pytest
from hypothesis import given, settings, strategies as st

import corpus
from graphcoh import SparseIntMatrix, smith_normal_form


def test_identity_and_simple_factors():
    assert smith_normal_form(SparseIntMatrix.identity(3)).factors == (1, 1, 1)
    result = smith_normal_form([[0, 2], [0, 0]])
    assert result.factors == (2,)
    assert result.rank == 1
    # [[-b, 2], [2a, b]] at (a, b) = (-1, 0)
    assert smith_normal_form([[0, 2], [-2, 0]]).factors == (2, 2)


def test_zero_and_empty_matrices():
    assert smith_normal_form(SparseIntMatrix.zero(3, 4)).factors == ()
    assert smith_normal_form(SparseIntMatrix.zero(0, 0)).rank == 0
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0


def test_known_torsion():
    # diag(2, 6) is already in normal form
    assert smith_normal_form([[2, 0], [0, 6]]).factors == (2, 6)
    # same group, scrambled presentation
    assert smith_normal_form([[2, 2], [2, 8]]).factors == (2, 6)
    assert smith_normal_form([[4, 6], [6, 4]]).factors == (2, 10)


def test_divisibility_chain_always_holds():
    rng = random.Random(3)
    for _ in range(100):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        factors = smith_normal_form(mat).factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_matches_minor_gcd_oracle(m, n, data):
    rows = [
        [data.draw(st.integers(-3, 3)) for _ in range(n)]
        for _ in range(m)
    ]
    assert smith_normal_form(rows).factors == corpus.snf_by_minor_gcds(rows)


def test_sparse_matrix_algebra():
    a = SparseIntMatrix.from_rows([[1, 2], [0, 1]])
    b = SparseIntMatrix.from_rows([[1, 0], [3, 1]])
    assert (a @ b).to_dense() == [[7, 2], [3, 1]]
    assert a.transpose().to_dense() == [[1, 0], [2, 1]]
    assert a.get(0, 1) == 2 and a.get(1, 0) == 0
    assert SparseIntMatrix.zero(2, 2).is_zero()
    with pytest.raises(ValueError):
        a @ SparseIntMatrix.zero(3, 3)


def test_from_triplets_accumulates_and_cancels():
    m = SparseIntMatrix.from_triplets(2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 2), (1, 1, 3)])
    assert m.to_dense() == [[0, 0], [0, 5]]
    assert m.nnz == 1
    with pytest.raises(ValueError):
        SparseIntMatrix.from_triplets(1, 1, [(1, 0, 1)])


def test_large_entries_stay_exact():
    big = 10 ** 30
    result = smith_normal_form([[big, 0], [0, big * 3]])
    assert result.factors == (big, 3 * big)
