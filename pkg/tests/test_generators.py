"""Seeded matrix families, the Cayley transform, and exam helpers."""

from fractions import Fraction

import pytest

from mechlin import (
    InvalidArgument,
    Matrix,
    NotSkewSymmetric,
    det_turing,
    eig_qr,
    ldlt,
    matmul,
)
from mechlin.generators import (
    KINDS,
    cayley,
    exam_unimodular_question,
    gallery3,
    generate,
)
from mechlin.numeric import from_ndarray, to_ndarray

from oracles import circulant_eigenvalues


def entries(m):
    return [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]


def test_same_arguments_same_matrix():
    for kind in KINDS:
        a = generate(kind, size=4, seed=9)
        b = generate(kind, size=4, seed=9)
        assert a == b, kind


def test_seed_changes_output():
    for kind in ("circulant", "toeplitz", "banded", "spd_random", "unimodular_random"):
        assert generate(kind, size=5, seed=0) != generate(kind, size=5, seed=1)


def test_circulant_structure_and_spectrum():
    c = generate("circulant", first_row=[1, 2, 0, 3])
    rows = entries(c)
    for i in range(4):
        for j in range(4):
            assert rows[i][j] == rows[0][(j - i) % 4]
    got = eig_qr(from_ndarray(to_ndarray(c, float)), want_vectors=False).eigenvalues
    expect = list(circulant_eigenvalues([1, 2, 0, 3]))
    pool = [complex(z) for z in expect]
    for z in got:
        k = min(range(len(pool)), key=lambda t: abs(pool[t] - z))
        assert abs(pool[k] - z) < 1e-10
        pool.pop(k)


def test_toeplitz_constant_diagonals():
    t = generate("toeplitz", first_row=[5, 1, 2], first_col=[5, 7, 8])
    rows = entries(t)
    assert rows == [[5, 1, 2], [7, 5, 1], [8, 7, 5]]
    with pytest.raises(InvalidArgument):
        generate("toeplitz", first_row=[5, 1, 2], first_col=[4, 7, 8])  # corner clash


def test_hankel_constant_antidiagonals():
    h = generate("hankel", first_row=[1, 2, 3], last_col=[3, 4, 5])
    rows = entries(h)
    assert rows == [[1, 2, 3], [2, 3, 4], [3, 4, 5]]
    for i in range(3):
        for j in range(3):
            assert rows[i][j] == rows[0][i + j] if i + j < 3 else True
    with pytest.raises(InvalidArgument):
        generate("hankel", first_row=[1, 2, 3], last_col=[9, 4, 5])


def test_banded_zero_pattern():
    b = generate("banded", size=6, seed=2, lower=1, upper=2)
    for i in range(6):
        for j in range(6):
            if not (-1 <= j - i <= 2):
                assert b[i, j] == 0
    with pytest.raises(InvalidArgument):
        generate("banded", size=3, lower=-1)


def test_checkerboard_pattern():
    c = generate("checkerboard", size=5, seed=4)
    for i in range(5):
        for j in range(5):
            if (i + j) % 2 == 1:
                assert c[i, j] == 0
            else:
                assert c[i, j] != 0


def test_anti_tridiagonal_pattern():
    a = generate("anti_tridiagonal", size=5, seed=4)
    for i in range(5):
        for j in range(5):
            if 3 <= i + j <= 5:
                assert a[i, j] != 0
            else:
                assert a[i, j] == 0


def test_spd_random_is_symmetric_positive_definite():
    a = generate("spd_random", size=5, seed=3)
    assert a.transpose() == a
    f = ldlt(a)  # exact: all pivots strictly positive
    assert all(f.Dg[k, k] > 0 for k in range(5))


def test_unimodular_random_has_unit_determinant():
    for seed in range(6):
        u = generate("unimodular_random", size=4, seed=seed, ops=15)
        assert all(x.denominator == 1 for x in u.entries())
        assert abs(det_turing(u)) == 1


def test_gallery3_entries():
    assert entries(gallery3()) == [[-149, -50, -154], [537, 180, 546], [-27, -9, -25]]
    assert generate("gallery3") == gallery3()


def test_unknown_kind_and_missing_size():
    with pytest.raises(InvalidArgument):
        generate("hilbert", size=3)
    with pytest.raises(InvalidArgument):
        generate("banded")


def test_cayley_known_rotation():
    s = Matrix.from_rows([[0, 1], [-1, 0]])
    assert entries(cayley(s)) == [[0, -1], [1, 0]]


def test_cayley_is_exactly_orthogonal():
    import random

    rng = random.Random(5)
    for n in (2, 3, 4):
        b = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        s = Matrix.from_rows(b)
        s = s - s.transpose()  # force skew-symmetry
        q = cayley(s)
        assert matmul(q.transpose(), q) == Matrix.identity(n)


def test_cayley_rejects_non_skew():
    with pytest.raises(NotSkewSymmetric):
        cayley(Matrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(NotSkewSymmetric):
        cayley(Matrix.from_rows([[0, 1, 0], [-1, 0, 0]]))


def test_exam_unimodular_question():
    a, inv = exam_unimodular_question(seed=1)
    assert all(x.denominator == 1 for x in a.entries())
    assert all(x.denominator == 1 for x in inv.entries())
    assert max(abs(x) for x in a.entries()) <= 9
    assert matmul(a, inv) == Matrix.identity(3)
    again, _ = exam_unimodular_question(seed=1)
    assert again == a
