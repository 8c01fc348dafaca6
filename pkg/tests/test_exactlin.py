from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from khgraph.errors import ComplexIntegrityError, ContractError
from khgraph.exactlin import SparseMatrix, homology_dim, rank_exact
from strategies import int_matrices


def dense_rank(rows):
    """Textbook Gaussian elimination over Fraction; independent of the sparse path."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_identity_rank():
    assert rank_exact(SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3


def test_zero_rank():
    assert rank_exact(SparseMatrix.zeros(5, 7)) == 0


def test_proportional_rows():
    assert rank_exact(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1


def test_empty_matrix():
    assert rank_exact(SparseMatrix.zeros(0, 0)) == 0
    assert rank_exact(SparseMatrix.zeros(0, 4)) == 0


def test_rational_entries():
    m = SparseMatrix.from_dense([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank_exact(m) == 1
    m = SparseMatrix.from_dense([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 7)]])
    assert rank_exact(m) == 2


def test_rejects_float_and_zero_and_bounds():
    with pytest.raises(ContractError):
        SparseMatrix(2, 2, {(0, 0): 0.5})
    with pytest.raises(ContractError):
        SparseMatrix(2, 2, {(0, 0): 0})
    with pytest.raises(ContractError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_homology_no_differentials():
    assert homology_dim(SparseMatrix.zeros(0, 2), SparseMatrix.zeros(2, 0)) == 2


def test_homology_rank_one_kernel():
    assert homology_dim(SparseMatrix.from_dense([[1, 1]]), SparseMatrix.zeros(2, 0)) == 1


def test_homology_exact():
    d_in = SparseMatrix.from_dense([[1], [0]])
    d_out = SparseMatrix.from_dense([[0, 1]])
    assert homology_dim(d_out, d_in) == 0


def test_homology_dimension_mismatch():
    with pytest.raises(ContractError):
        homology_dim(SparseMatrix.zeros(1, 2), SparseMatrix.zeros(3, 1))


def test_homology_not_a_complex():
    d_in = SparseMatrix.from_dense([[1], [0]])
    d_out = SparseMatrix.from_dense([[1, 0]])
    with pytest.raises(ComplexIntegrityError):
        homology_dim(d_out, d_in)


@given(int_matrices())
def test_rank_matches_dense_oracle(mc):
    rows, c = mc
    m = SparseMatrix.from_dense(rows, col_count=c)
    expected = dense_rank(rows) if rows else 0
    assert rank_exact(m) == expected


@given(int_matrices(), st.randoms(use_true_random=False))
def test_rank_transpose_and_permutation(mc, rnd):
    rows, c = mc
    m = SparseMatrix.from_dense(rows, col_count=c)
    r = rank_exact(m)
    assert rank_exact(m.transpose()) == r
    rp = list(range(m.row_count))
    cp = list(range(m.col_count))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    permuted = SparseMatrix(m.row_count, m.col_count, {(rp[i], cp[j]): v for (i, j), v in m.entries.items()})
    assert rank_exact(permuted) == r


@given(int_matrices(max_rows=6, max_cols=6), st.fractions(min_value=-5, max_value=5).filter(lambda f: f != 0))
def test_rank_row_scaling(mc, f):
    rows, c = mc
    if not rows:
        return
    m = SparseMatrix.from_dense(rows, col_count=c)
    scaled = SparseMatrix(m.row_count, m.col_count,
                          {(i, j): (v * f if i == 0 else v) for (i, j), v in m.entries.items()})
    assert rank_exact(scaled) == rank_exact(m)


@given(int_matrices(max_rows=5, max_cols=5), int_matrices(max_rows=5, max_cols=5))
def test_homology_nonnegative_on_complexes(a, b):
    # d_out = [A | 0] and d_in = [0 ; B] compose to zero.
    (ra, ca), (rb, cb) = a, b
    n = ca + len(rb)
    d_out = SparseMatrix(len(ra), n, {(i, j): v for i, row in enumerate(ra) for j, v in enumerate(row) if v})
    d_in = SparseMatrix(n, cb, {(ca + i, j): v for i, row in enumerate(rb) for j, v in enumerate(row) if v})
    h = homology_dim(d_out, d_in)
    assert h >= 0
    assert h == n - (dense_rank(ra) if ra else 0) - (dense_rank(rb) if rb else 0)
