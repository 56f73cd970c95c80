"""Factorizations: PLU, Turing PA=LDUR, QR, LDL^T, Cholesky, solving."""

import math
import random
from fractions import Fraction

import pytest

from mechlin import (
    InvalidArgument,
    Matrix,
    NotPositiveDefinite,
    RankDeficient,
    ShapeMismatch,
    Singular,
    SingularBlock,
    ZeroPivot,
    block_lu_2x2,
    cholesky,
    hstack,
    ldlt,
    lstsq,
    lu_no_pivot_feasible,
    matmul,
    nc_normalize,
    nc_sym,
    plu,
    project_colspace,
    qr,
    rank,
    rref,
    schur_complement,
    solve,
    solve_square,
    turing,
)
from mechlin.factor import permutation_matrix, permute_rows

import oracles
from support import rand_fraction_matrix, rand_float_matrix, rand_rank_deficient


def frac_matrix(rows):
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


def is_unit_lower(m):
    for i in range(m.rows):
        for j in range(m.cols):
            if i == j and m[i, j] != 1:
                return False
            if j > i and m[i, j] != 0:
                return False
    return True


def is_upper(m):
    return all(m[i, j] == 0 for i in range(m.rows) for j in range(m.cols) if j < i)


# -- PLU -----------------------------------------------------------------------


def test_plu_partial_reassembles():
    a = frac_matrix([[0, 2, 1], [1, 1, 1], [4, 0, 2]])
    f = plu(a, pivoting="partial")
    assert is_unit_lower(f.L) and is_upper(f.U)
    assert f.reassemble_lhs(a) == matmul(f.L, f.U)
    # exact partial pivoting takes the first nonzero, so only the zero
    # in the (0,0) slot forces an exchange
    assert f.p == (1, 0, 2)


def test_plu_partial_double_picks_max_magnitude():
    a = Matrix.from_rows([[1.0, 2.0], [4.0, 3.0]])
    f = plu(a, pivoting="partial")
    assert f.p == (1, 0)
    assert f.U[0, 0] == 4.0
    assert all(abs(f.L[i, j]) <= 1.0 for i in range(2) for j in range(i))


def test_plu_none_zero_pivot():
    with pytest.raises(ZeroPivot) as ei:
        plu(frac_matrix([[0, 1], [1, 0]]), pivoting="none")
    assert ei.value.k == 0


def test_plu_none_on_feasible_matrix():
    a = frac_matrix([[2, 1, 0], [1, 0, -1], [0, 1, 1]])
    assert lu_no_pivot_feasible(a)
    f = plu(a, pivoting="none")
    assert f.p == (0, 1, 2)
    assert matmul(f.L, f.U) == a


def test_lu_no_pivot_feasible_false_cases():
    assert not lu_no_pivot_feasible(frac_matrix([[0, 1], [1, 0]]))
    # singular leading 2x2 minor forces a row exchange at step 1
    assert not lu_no_pivot_feasible(frac_matrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]]))


@pytest.mark.parametrize("pivoting", ["partial", "complete", "rook"])
def test_plu_strategies_on_random_matrices(pivoting):
    rng = random.Random(hash(pivoting) % 2**32)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = rand_fraction_matrix(rng, n, n)
        try:
            f = plu(a, pivoting=pivoting)
        except Singular:
            assert oracles.det_leibniz(a.to_rows()) == 0
            continue
        assert is_unit_lower(f.L) and is_upper(f.U)
        assert f.reassemble_lhs(a) == matmul(f.L, f.U)


def test_plu_complete_returns_column_permutation():
    a = Matrix.from_rows([[1.0, 8.0], [2.0, 3.0]])
    f = plu(a, pivoting="complete")
    assert f.q is not None
    # for doubles the first pivot is the largest entry of the whole matrix
    assert f.U[0, 0] == 8.0
    assert f.q == (1, 0)
    back = matmul(f.L, f.U)
    pa = f.reassemble_lhs(a)
    assert all(abs(back[i, j] - pa[i, j]) < 1e-14 for i in range(2) for j in range(2))


# -- Turing factoring ------------------------------------------------------------


def check_turing(a):
    f = turing(a)
    pa = permute_rows(a, list(f.p))
    assert matmul(matmul(f.L, f.D), matmul(f.U, f.R)) == pa
    assert is_unit_lower(f.L) and is_unit_lower(f.U.transpose())
    for i in range(f.D.rows):
        for j in range(f.D.cols):
            if i == j:
                assert f.D[i, j] != 0
            else:
                assert f.D[i, j] == 0
    expect, pivots = oracles.rref_fractions(a.to_rows())
    assert f.R.to_rows() == expect
    assert f.rank == len(pivots)
    assert list(f.pivot_cols) == pivots


def test_turing_known_rank_one():
    a = frac_matrix([[2, 4], [1, 2]])
    f = turing(a)
    assert f.rank == 1
    assert f.R == frac_matrix([[1, 2], [0, 0]])
    check_turing(a)


def test_turing_random_shapes_and_ranks():
    rng = random.Random(314)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 6)
        if rng.random() < 0.4:
            a = rand_rank_deficient(rng, rows, cols, rng.randint(0, min(rows, cols)) or 1)
        else:
            a = rand_fraction_matrix(rng, rows, cols)
        check_turing(a)


def test_turing_zero_matrix():
    a = Matrix.zeros(3, 4, Fraction(0))
    f = turing(a)
    assert f.rank == 0
    assert f.R == a


def test_rref_and_rank_against_oracle():
    rng = random.Random(2718)
    for _ in range(30):
        a = rand_fraction_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        expect, pivots = oracles.rref_fractions(a.to_rows())
        assert rref(a).to_rows() == expect
        assert rank(a) == len(pivots)


def test_permutation_matrix_round_trip():
    p = [2, 0, 1]
    P = permutation_matrix(p)
    a = frac_matrix([[1, 2], [3, 4], [5, 6]])
    assert matmul(P, a) == permute_rows(a, p)


# -- QR ---------------------------------------------------------------------------


def test_qr_householder_double():
    rng = random.Random(99)
    for _ in range(10):
        m = rng.randint(2, 6)
        n = rng.randint(1, m)
        a = rand_float_matrix(rng, m, n, 5.0)
        f = qr(a, mode="householder-double")
        assert f.mode == "householder-double"
        qtq = matmul(f.Q.transpose(), f.Q)
        for i in range(n):
            for j in range(n):
                assert abs(qtq[i, j] - (1.0 if i == j else 0.0)) < 1e-12
        back = matmul(f.Q, f.R)
        for i in range(m):
            for j in range(n):
                assert abs(back[i, j] - a[i, j]) < 1e-12
        assert all(abs(f.R[i, j]) < 1e-12 for i in range(n) for j in range(n) if j < i)


def test_qr_mgs_exact():
    a = frac_matrix([[1, 1], [1, 0], [0, 1]])
    f = qr(a, mode="mgs-exact")
    assert matmul(f.Q, f.R) == a  # exact reconstruction, no radicals involved
    qtq = matmul(f.Q.transpose(), f.Q)
    assert qtq[0, 1] == 0 and qtq[1, 0] == 0
    assert f.R[0, 0] == 1 and f.R[1, 1] == 1  # unit upper triangular


def test_qr_mgs_exact_rank_deficient():
    with pytest.raises(RankDeficient) as ei:
        qr(frac_matrix([[1, 2], [2, 4]]), mode="mgs-exact")
    assert ei.value.col == 1


def test_qr_wide_matrix_rejected():
    with pytest.raises(ShapeMismatch):
        qr(frac_matrix([[1, 2, 3], [4, 5, 6]]))


# -- symmetric factorizations ------------------------------------------------------


def test_ldlt_exact():
    a = frac_matrix([[4, 2, 2], [2, 3, 1], [2, 1, 5]])
    f = ldlt(a)
    assert is_unit_lower(f.L)
    assert matmul(matmul(f.L, f.Dg), f.L.transpose()) == a
    # indefinite is fine for LDL^T as long as leading minors are nonzero
    b = frac_matrix([[1, 2], [2, 1]])
    g = ldlt(b)
    assert matmul(matmul(g.L, g.Dg), g.L.transpose()) == b
    assert g.Dg[1, 1] == -3


def test_ldlt_requires_symmetry():
    with pytest.raises(InvalidArgument):
        ldlt(frac_matrix([[1, 2], [3, 4]]))


def test_ldlt_zero_leading_minor():
    with pytest.raises(ZeroPivot):
        ldlt(frac_matrix([[0, 1], [1, 0]]))


def test_cholesky_spd_and_failure():
    a = frac_matrix([[4, 2], [2, 5]])
    L = cholesky(a)
    back = matmul(L, L.transpose())
    for i in range(2):
        for j in range(2):
            assert abs(back[i, j] - float(a[i, j])) < 1e-12
    with pytest.raises(NotPositiveDefinite) as ei:
        cholesky(frac_matrix([[1, 2], [2, 1]]))
    assert ei.value.k == 1


# -- least squares and projection ----------------------------------------------------


def test_lstsq_double_matches_normal_equations():
    rng = random.Random(5)
    a = rand_float_matrix(rng, 6, 3, 2.0)
    b = rand_float_matrix(rng, 6, 1, 2.0)
    x, resid = lstsq(a, b)
    # residual must be orthogonal to the column space
    r = [b[i, 0] - sum(a[i, j] * x[j, 0] for j in range(3)) for i in range(6)]
    for j in range(3):
        assert abs(sum(a[i, j] * r[i] for i in range(6))) < 1e-10
    assert abs(resid - math.sqrt(sum(v * v for v in r))) < 1e-10


def test_lstsq_exact_rational():
    a = frac_matrix([[1, 0], [0, 1], [1, 1]])
    b = Matrix.column([Fraction(1), Fraction(1), Fraction(1)])
    x, resid = lstsq(a, b)
    assert x.col_values(0) == (Fraction(2, 3), Fraction(2, 3))
    assert resid > 0


def test_lstsq_exact_rank_deficient():
    with pytest.raises(RankDeficient):
        lstsq(frac_matrix([[1, 2], [2, 4], [3, 6]]), Matrix.column([Fraction(1)] * 3))


def test_project_colspace_exact_plane():
    # singular matrix: columns span a plane, b poking out of it
    a = frac_matrix([[1, 0, 1], [0, 1, 1], [0, 0, 0]])
    b = Matrix.column([Fraction(1), Fraction(2), Fraction(3)])
    p = project_colspace(a, b)
    assert p.col_values(0) == (Fraction(1), Fraction(2), Fraction(0))
    # residual is orthogonal to every column of A
    r = b - p
    for j in range(3):
        assert sum(a[i, j] * r[i, 0] for i in range(3)) == 0


def test_project_colspace_full_rank_recovers_b_in_range():
    a = frac_matrix([[2, 0], [0, 3], [0, 0]])
    b = Matrix.column([Fraction(4), Fraction(9), Fraction(0)])
    assert project_colspace(a, b) == b


def test_project_colspace_zero_matrix():
    a = Matrix.zeros(3, 2, Fraction(0))
    b = Matrix.column([Fraction(1), Fraction(1), Fraction(1)])
    assert project_colspace(a, b) == Matrix.column([Fraction(0)] * 3)


# -- solve ---------------------------------------------------------------------------


def test_solve_unique():
    a = frac_matrix([[3, 4], [2, -8]])
    b = Matrix.column([Fraction(7), Fraction(1)])
    res = solve(a, b)
    assert res.kind == "unique"
    assert res.x.col_values(0) == (Fraction(15, 8), Fraction(11, 32))
    assert res.nullspace == ()


def test_solve_underdetermined():
    a = frac_matrix([[1, 1, 1]])
    b = Matrix.column([Fraction(6)])
    res = solve(a, b)
    assert res.kind == "particular"
    assert matmul(a, res.x) == b
    assert len(res.nullspace) == 2
    for v in res.nullspace:
        assert matmul(a, v) == Matrix.column([Fraction(0)])


def test_solve_inconsistent_witness():
    a = frac_matrix([[1, 2], [2, 4]])
    b = Matrix.column([Fraction(1), Fraction(3)])
    res = solve(a, b)
    assert res.kind == "inconsistent"
    assert res.witness_row is not None
    # the witness row of rref([A|b]) reads 0 = 1
    assert res.witness[-1] == 1
    assert all(w == 0 for w in res.witness[:-1])


def test_solve_random_consistency():
    rng = random.Random(13)
    for _ in range(30):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_fraction_matrix(rng, rows, cols)
        b = Matrix.column([Fraction(rng.randint(-5, 5)) for _ in range(rows)])
        res = solve(a, b)
        if res.kind == "inconsistent":
            # no x can work: check via the oracle rank test
            _, piv_a = oracles.rref_fractions(a.to_rows())
            _, piv_ab = oracles.rref_fractions(hstack(a, b).to_rows())
            assert len(piv_ab) > len(piv_a)
        else:
            assert matmul(a, res.x) == b
            for v in res.nullspace:
                assert matmul(a, v) == Matrix.zeros(rows, 1, Fraction(0))


def test_solve_lu_method():
    a = frac_matrix([[2, 1], [1, 3]])
    b = Matrix.column([Fraction(3), Fraction(4)])
    res = solve(a, b, method="lu")
    assert res.kind == "unique" and matmul(a, res.x) == b
    with pytest.raises(Singular):
        solve(frac_matrix([[1, 2], [2, 4]]), b, method="lu")
    with pytest.raises(ShapeMismatch):
        solve(a, Matrix.column([Fraction(1)]))


def test_solve_square_direct():
    a = frac_matrix([[2, 0], [0, 4]])
    x = solve_square(a, Matrix.identity(2))
    assert x == frac_matrix([["1/2", 0], [0, "1/4"]])


# -- block forms ------------------------------------------------------------------


def test_block_lu_symbolic():
    b11, b12 = nc_sym("B11"), nc_sym("B12")
    b21, b22 = nc_sym("B21"), nc_sym("B22")
    B = Matrix.from_rows([[b11, b12], [b21, b22]])
    L, U = block_lu_2x2(B)
    assert L[0, 0] == NCExprOne() and L[0, 1].is_zero()
    assert L[1, 0] == b21 * b11.inverse()
    assert U[0, 0] == b11 and U[0, 1] == b12
    assert U[1, 1] == b22 - b21 * b11.inverse() * b12
    prod = matmul(L, U)
    for i in range(2):
        for j in range(2):
            assert nc_normalize(prod[i, j]) == B[i, j]


def NCExprOne():
    from mechlin import NCExpr

    return NCExpr.const(1)


def test_block_lu_rejects_sum_in_corner():
    s = nc_sym("x") + nc_sym("y")
    B = Matrix.from_rows([[s, s], [s, s]])
    with pytest.raises(InvalidArgument):
        block_lu_2x2(B)


def test_schur_complement_value():
    a = frac_matrix([[2, 0, 1], [0, 2, 1], [1, 1, 3]])
    s = schur_complement(a, 2, 2)
    # 3 - [1 1] * inv(diag(2,2)) * [1;1] = 3 - 1 = 2
    assert s == frac_matrix([[2]])


def test_schur_complement_singular_block():
    a = frac_matrix([[0, 0, 1], [0, 0, 1], [1, 1, 1]])
    with pytest.raises(SingularBlock):
        schur_complement(a, 2, 2)
