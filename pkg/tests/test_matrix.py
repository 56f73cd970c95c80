"""Core matrix container and the four multiplication views."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mechlin import (
    GaussianRational,
    Matrix,
    ShapeMismatch,
    block_join,
    block_split,
    hstack,
    matmul,
    nc_sym,
    sym_matrix,
    vstack,
)
from mechlin.matrix import augment

from support import rand_fraction_matrix


def frac_matrix(rows):
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


def test_construction_and_shape():
    a = Matrix(2, 3, [1, 2, 3, 4, 5, 6])
    assert a.shape == (2, 3)
    assert a[0, 0] == 1 and a[1, 2] == 6
    assert a.row_values(1) == (4, 5, 6)
    assert a.col_values(2) == (3, 6)
    with pytest.raises(ShapeMismatch):
        Matrix(2, 2, [1, 2, 3])


def test_from_rows_rejects_ragged_input():
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows([[1, 2], [3]])


def test_identity_zeros_column():
    eye = Matrix.identity(3)
    assert eye[0, 0] == 1 and eye[0, 1] == 0
    assert Matrix.zeros(2, 2).entries() == (0, 0, 0, 0)
    c = Matrix.column([1, 2, 3])
    assert c.shape == (3, 1) and c.is_column()


def test_immutability():
    a = Matrix.identity(2)
    with pytest.raises(AttributeError):
        a.rows = 5
    b = a.with_entry(0, 1, 7)
    assert b[0, 1] == 7 and a[0, 1] == 0  # original untouched


def test_indexing_bounds():
    a = Matrix.identity(2)
    with pytest.raises(IndexError):
        a[2, 0]
    with pytest.raises(IndexError):
        a[0, -1]


def test_add_sub_scale():
    a = frac_matrix([[1, 2], [3, 4]])
    b = frac_matrix([[5, 6], [7, 8]])
    assert a + b == frac_matrix([[6, 8], [10, 12]])
    assert b - a == frac_matrix([[4, 4], [4, 4]])
    assert a.scale(Fraction(1, 2)) == frac_matrix([["1/2", 1], ["3/2", 2]])
    assert -a == frac_matrix([[-1, -2], [-3, -4]])
    with pytest.raises(ShapeMismatch):
        a + Matrix.identity(3)


def test_matmul_against_triple_loop():
    rng = random.Random(7)
    for _ in range(20):
        m, k, n = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = rand_fraction_matrix(rng, m, k)
        b = rand_fraction_matrix(rng, k, n)
        c = matmul(a, b)
        for i in range(m):
            for j in range(n):
                assert c[i, j] == sum(a[i, t] * b[t, j] for t in range(k))


def test_matmul_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        matmul(Matrix.identity(2), Matrix.identity(3))


def test_matmul_modes_agree_entrywise():
    # all four orderings compute the same product, just scheduled differently
    rng = random.Random(11)
    a = rand_fraction_matrix(rng, 3, 4)
    b = rand_fraction_matrix(rng, 4, 2)
    ref = matmul(a, b, mode="dot")
    for mode in ("columns", "rows", "outer"):
        assert matmul(a, b, mode=mode) == ref


def test_matmul_preserves_operand_order():
    # with noncommuting entries A[i,k]*B[k,j] must multiply in that order
    x, y = nc_sym("x"), nc_sym("y")
    a = Matrix.from_rows([[x]])
    b = Matrix.from_rows([[y]])
    assert matmul(a, b)[0, 0] == x * y
    assert matmul(b, a)[0, 0] == y * x
    for mode in ("columns", "rows", "outer"):
        assert matmul(a, b, mode=mode)[0, 0] == x * y


def test_mul_operator_and_matmul_operator():
    a = frac_matrix([[1, 2], [3, 4]])
    assert a @ Matrix.identity(2) == a
    assert (a * Fraction(2))[1, 1] == 8
    assert (Fraction(2) * a)[0, 0] == 2


def test_transpose_and_conjugate_transpose():
    a = Matrix.from_rows([[GaussianRational(1, 2), GaussianRational(0, 1)]])
    t = a.transpose()
    assert t.shape == (2, 1) and t[0, 0] == GaussianRational(1, 2)
    h = a.conjugate_transpose()
    assert h[0, 0] == GaussianRational(1, -2)
    assert h[1, 0] == GaussianRational(0, -1)


def test_trace():
    assert frac_matrix([[1, 9], [9, 5]]).trace() == 6
    with pytest.raises(ShapeMismatch):
        Matrix.zeros(2, 3).trace()


def test_submatrix_and_minor():
    a = frac_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert a.submatrix([0, 2], [1]) == frac_matrix([[2], [8]])
    assert a.minor(1, 1) == frac_matrix([[1, 3], [7, 9]])


def test_stacking():
    a = frac_matrix([[1], [2]])
    b = frac_matrix([[3], [4]])
    assert hstack(a, b) == frac_matrix([[1, 3], [2, 4]])
    assert vstack(a, b) == frac_matrix([[1], [2], [3], [4]])
    assert augment(a, b) == hstack(a, b)
    with pytest.raises(ShapeMismatch):
        hstack(a, frac_matrix([[1]]))
    with pytest.raises(ShapeMismatch):
        vstack(a, frac_matrix([[1, 2]]))


@given(
    st.integers(min_value=2, max_value=4),
    st.integers(min_value=2, max_value=4),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=10_000),
)
def test_block_split_join_round_trip(rows, cols, r, c, seed):
    if r >= rows or c >= cols:
        return
    a = rand_fraction_matrix(random.Random(seed), rows, cols)
    a11, a12, a21, a22 = block_split(a, r, c)
    assert a11.shape == (r, c) and a22.shape == (rows - r, cols - c)
    assert block_join(a11, a12, a21, a22) == a


def test_sym_matrix_entries():
    s = sym_matrix(2)
    assert str(s[0, 0]) == "a11"
    assert str(s[1, 0]) == "a21"
    p = matmul(s, s)
    assert p[0, 0] == s[0, 0] * s[0, 0] + s[0, 1] * s[1, 0]


def test_map():
    a = frac_matrix([[1, -2], [-3, 4]])
    assert a.map(abs) == frac_matrix([[1, 2], [3, 4]])
