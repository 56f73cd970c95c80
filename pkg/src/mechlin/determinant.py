"""Determinants three ways, plus the small closed forms built on them.

det_laplace is the teaching oracle (first-row minor expansion, any
commutative ring).  det_schur is the efficient recursion through the
Schur determinantal identity det(A) = det(A11) det(A22 - A21 A11^-1 A12),
splitting at floor(n/2) and permuting rows when the leading block is
singular.  det_turing reads the determinant off the Turing factors as a
signed pivot product.
"""

from __future__ import annotations

from typing import Any, List, Optional, Tuple

from .errors import InvalidArgument, ShapeMismatch, Singular
from .factor import _lift, matmul, schur_complement, turing
from .matrix import Matrix, sym_matrix
from .scalars import is_zero
from .symexpr import SymExpr


def det_laplace(a: Matrix) -> Any:
    """Recursive first-row minor expansion; works over any commutative ring."""
    if not a.is_square():
        raise ShapeMismatch(f"determinant of non-square {a.shape}")
    n = a.rows
    if n == 1:
        return a[0, 0]
    total = None
    for j in range(n):
        c = a[0, j]
        if is_zero(c):
            continue
        term = c * det_laplace(a.minor(0, j))
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    if total is None:
        z = a[0, 0]
        return z - z
    return total


def det_schur(a: Matrix) -> Any:
    """Midpoint Schur determinantal recursion with row-permutation rescue."""
    if not a.is_square():
        raise ShapeMismatch(f"determinant of non-square {a.shape}")
    a = a.map(_lift)
    return _det_schur_rec(a)


def _det_schur_rec(a: Matrix) -> Any:
    n = a.rows
    if n == 1:
        return a[0, 0]
    r = n // 2
    perm, sign = _nonsingular_leading_rows(a, r)
    if perm is None:
        z = a[0, 0]
        return z - z
    b = Matrix.from_rows([list(a.row_values(i)) for i in perm])
    b11 = b.submatrix(range(r), range(r))
    s = schur_complement(b, r, r)
    d = _det_schur_rec(b11) * _det_schur_rec(s)
    return d if sign > 0 else -d


def _nonsingular_leading_rows(a: Matrix, r: int) -> Tuple[Optional[List[int]], int]:
    """Pick rows making the leading r x r block nonsingular.

    Eliminates down the first r columns choosing the first workable row
    per column; returns (row order, permutation sign), or (None, 0) when
    the leading columns cannot supply r independent rows (det is then 0).
    """
    n = a.rows
    w = [[_lift(a[i, j]) for j in range(r)] for i in range(n)]
    rows = list(range(n))
    for c in range(r):
        piv = None
        for i in range(c, n):
            if not is_zero(w[i][c]):
                piv = i
                break
        if piv is None:
            return None, 0
        if piv != c:
            w[c], w[piv] = w[piv], w[c]
            rows[c], rows[piv] = rows[piv], rows[c]
        pivot = w[c][c]
        for i in range(c + 1, n):
            if is_zero(w[i][c]):
                continue
            mult = w[i][c] / pivot
            for j in range(c, r):
                w[i][j] = w[i][j] - mult * w[c][j]
    sign = _perm_sign(rows)
    return rows, sign


def _perm_sign(p: List[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_turing(a: Matrix) -> Any:
    """Signed product of Turing pivots: det(A) = sign(P) * prod(D) if full rank."""
    if not a.is_square():
        raise ShapeMismatch(f"determinant of non-square {a.shape}")
    t = turing(a)
    n = a.rows
    if t.rank < n:
        z = _lift(a[0, 0])
        return z - z
    d = t.D[0, 0]
    for i in range(1, n):
        d = d * t.D[i, i]
    return d if _perm_sign(list(t.p)) > 0 else -d


def det(a: Matrix, method: str = "schur") -> Any:
    if method == "schur":
        return det_schur(a)
    if method == "laplace":
        return det_laplace(a)
    if method == "turing":
        return det_turing(a)
    raise InvalidArgument(f"unknown determinant method {method!r}")


def det2x2(a: Matrix) -> Any:
    if a.shape != (2, 2):
        raise ShapeMismatch(f"det2x2 on {a.shape}")
    return a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]


def inv2x2(a: Matrix) -> Matrix:
    if a.shape != (2, 2):
        raise ShapeMismatch(f"inv2x2 on {a.shape}")
    a = a.map(_lift)
    d = det2x2(a)
    if is_zero(d):
        raise Singular("2x2 matrix is singular")
    return Matrix(2, 2, [a[1, 1] / d, -a[0, 1] / d, -a[1, 0] / d, a[0, 0] / d])


def inverse_exact(a: Matrix) -> Matrix:
    """Inverse by solving A X = I through the Turing factors, then verified."""
    if not a.is_square():
        raise ShapeMismatch(f"inverse of non-square {a.shape}")
    a = a.map(_lift)
    n = a.rows
    t = turing(a)
    if t.rank < n:
        raise Singular(f"matrix has rank {t.rank} < {n}")
    # PA = LDUR with R = I here, so solve L D U x = P e_j per column
    sample = a[0, 0]
    zero = sample - sample
    cols: List[List[Any]] = []
    for j in range(n):
        rhs = [zero] * n
        rhs[list(t.p).index(j)] = _one_of(sample)
        y = _forward_unit_rows(t.L, rhs)
        y = [y[i] / t.D[i, i] for i in range(n)]
        x = _back_unit(t.U, y)
        cols.append(x)
    X = Matrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])
    eye = Matrix.identity(n, one=_one_of(sample), zero=zero)
    if matmul(a, X) != eye:
        raise Singular("inverse verification failed")
    return X


def _one_of(sample: Any) -> Any:
    from .factor import _ring_one

    return _ring_one(_lift(sample))


def _forward_unit_rows(L: Matrix, rhs: List[Any]) -> List[Any]:
    n = L.rows
    y: List[Any] = [None] * n
    for i in range(n):
        acc = rhs[i]
        for j in range(i):
            acc = acc - L[i, j] * y[j]
        y[i] = acc
    return y


def _back_unit(U: Matrix, y: List[Any]) -> List[Any]:
    n = U.rows
    x: List[Any] = [None] * n
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for j in range(i + 1, n):
            acc = acc - U[i, j] * x[j]
        x[i] = acc
    return x


def cramer_solve(a: Matrix, b: Matrix) -> Matrix:
    """x_i = det(A with column i replaced by b) / det(A)."""
    if not a.is_square():
        raise ShapeMismatch(f"Cramer on non-square {a.shape}")
    if a.rows != b.rows or b.cols != 1:
        raise ShapeMismatch(f"Cramer: A is {a.shape}, b is {b.shape}")
    a = a.map(_lift)
    b = b.map(_lift)
    d = det_turing(a)
    if is_zero(d):
        raise Singular("Cramer needs a nonsingular matrix")
    n = a.rows
    xs = []
    for i in range(n):
        cols = []
        for j in range(n):
            cols.append(b.col_values(0) if j == i else a.col_values(j))
        ai = Matrix(n, n, [cols[j][r] for r in range(n) for j in range(n)])
        xs.append(det_turing(ai) / d)
    return Matrix.column(xs)


def symbolic_det_termcount(n: int) -> Tuple[SymExpr, int]:
    """Fully symbolic determinant and its term count (n! for n in 1..5)."""
    if not (1 <= n <= 5):
        raise InvalidArgument("symbolic determinant limited to n in 1..5")
    m = sym_matrix(n)
    d = det_laplace(m)
    return d, d.term_count()
