"""Matrix factorings.

PLU with four pivoting strategies, the Turing factoring PA = LDUR
(whose R is the reduced row echelon form), QR in an exact and a double
flavor, recursive LDL^T and Cholesky, least squares and column-space
projection, and the 2x2 block LU over noncommutative symbols.

Everything here works over any field the Matrix holds.  For exact
scalars "partial pivoting" means the first nonzero candidate: magnitude
comparisons are a floating-point concept and mean nothing for symbols.
For doubles the usual max-magnitude rules apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from .errors import (
    InvalidArgument,
    NotPositiveDefinite,
    RankDeficient,
    ShapeMismatch,
    Singular,
    SingularBlock,
    ZeroPivot,
)
from .matrix import Matrix, block_join, block_split, hstack, matmul
from .ncexpr import NCExpr
from .scalars import GaussianRational, is_zero

# -- permutation helpers ------------------------------------------------


def permutation_matrix(p: List[int], one: Any = None, zero: Any = None) -> Matrix:
    """Row-permutation matrix: (P @ A) row i equals A row p[i]."""
    n = len(p)
    one = Fraction(1) if one is None else one
    zero = Fraction(0) if zero is None else zero
    e = [one if j == p[i] else zero for i in range(n) for j in range(n)]
    return Matrix(n, n, e)


def permute_rows(a: Matrix, p: List[int]) -> Matrix:
    return Matrix.from_rows([list(a.row_values(p[i])) for i in range(a.rows)])


def permute_cols(a: Matrix, q: List[int]) -> Matrix:
    return a.submatrix(range(a.rows), q)


def _pivot_weight(x: Any):
    """Comparison key: magnitude for floats, nonzero indicator for exact."""
    if isinstance(x, (float, complex)):
        return abs(x)
    if isinstance(x, GaussianRational):
        return 1 if x else 0
    return 1 if x != 0 else 0


def _lift(x: Any) -> Any:
    """Plain ints become Fractions so '/' stays exact."""
    return Fraction(x) if isinstance(x, int) else x


def lift_matrix(a: Matrix) -> Matrix:
    return a.map(_lift)


# -- PLU -----------------------------------------------------------------


@dataclass(frozen=True)
class PLUFactors:
    p: Tuple[int, ...]
    L: Matrix
    U: Matrix
    q: Optional[Tuple[int, ...]] = None

    def reassemble_lhs(self, a: Matrix) -> Matrix:
        """P A Q (or P A when there is no column permutation)."""
        pa = permute_rows(a, list(self.p))
        if self.q is not None:
            pa = permute_cols(pa, list(self.q))
        return pa


def plu(a: Matrix, pivoting: str = "partial") -> PLUFactors:
    """Factor P A Q = L U.

    pivoting: "none" | "partial" | "complete" | "rook".  With "none" a
    zero pivot that still has nonzero entries below it raises
    ZeroPivot(k); trailing zero pivots that need no elimination are fine.
    """
    if pivoting not in ("none", "partial", "complete", "rook"):
        raise InvalidArgument(f"unknown pivoting strategy {pivoting!r}")
    m, n = a.rows, a.cols
    w = [[_lift(x) for x in a.row_values(i)] for i in range(m)]
    zero = w[0][0] - w[0][0]
    one = _ring_one(w[0][0])
    p = list(range(m))
    q = list(range(n)) if pivoting in ("complete", "rook") else None
    lmults = [[zero] * m for _ in range(m)]  # strictly lower part of L

    steps = min(m, n)
    for k in range(steps):
        # -- choose pivot
        if pivoting == "none":
            piv_i, piv_j = k, k
            if is_zero(w[k][k]):
                if any(not is_zero(w[i][k]) for i in range(k + 1, m)):
                    raise ZeroPivot(k)
                continue
        elif pivoting == "partial":
            piv_i, piv_j = k, k
            best = None
            for i in range(k, m):
                wt = _pivot_weight(w[i][k])
                if best is None or wt > best:
                    best = wt
                    piv_i = i
            if is_zero(w[piv_i][k]):
                continue
        elif pivoting == "complete":
            piv_i, piv_j, best = k, k, None
            for i in range(k, m):
                for j in range(k, n):
                    wt = _pivot_weight(w[i][j])
                    if best is None or wt > best:
                        best, piv_i, piv_j = wt, i, j
            if is_zero(w[piv_i][piv_j]):
                break
        else:  # rook
            piv_i, piv_j = k, k
            best = None
            for i in range(k, m):
                wt = _pivot_weight(w[i][k])
                if best is None or wt > best:
                    best, piv_i = wt, i
            moved = True
            guard = 0
            while moved:
                guard += 1
                assert guard <= (m - k) * (n - k) + 1, "rook pivoting failed to settle"
                moved = False
                best_j = piv_j
                bw = _pivot_weight(w[piv_i][piv_j])
                for j in range(k, n):
                    wt = _pivot_weight(w[piv_i][j])
                    if wt > bw:
                        bw, best_j = wt, j
                if best_j != piv_j:
                    piv_j = best_j
                    moved = True
                best_i = piv_i
                bw = _pivot_weight(w[piv_i][piv_j])
                for i in range(k, m):
                    wt = _pivot_weight(w[i][piv_j])
                    if wt > bw:
                        bw, best_i = wt, i
                if best_i != piv_i:
                    piv_i = best_i
                    moved = True
            if is_zero(w[piv_i][piv_j]):
                break

        # -- swap into place
        if piv_i != k:
            w[k], w[piv_i] = w[piv_i], w[k]
            p[k], p[piv_i] = p[piv_i], p[k]
            lmults[k], lmults[piv_i] = lmults[piv_i], lmults[k]
        if q is not None and piv_j != k:
            for row in w:
                row[k], row[piv_j] = row[piv_j], row[k]
            q[k], q[piv_j] = q[piv_j], q[k]

        pivot = w[k][k]
        if is_zero(pivot):
            continue
        for i in range(k + 1, m):
            if is_zero(w[i][k]):
                continue
            mult = w[i][k] / pivot
            lmults[i][k] = mult
            w[i][k] = zero
            for j in range(k + 1, n):
                w[i][j] = w[i][j] - mult * w[k][j]

    lentries = []
    for i in range(m):
        for j in range(m):
            if i == j:
                lentries.append(one)
            elif j < i:
                lentries.append(lmults[i][j])
            else:
                lentries.append(zero)
    L = Matrix(m, m, lentries)
    U = Matrix.from_rows(w)
    return PLUFactors(tuple(p), L, U, tuple(q) if q is not None else None)


def lu_no_pivot_feasible(a: Matrix) -> bool:
    """True iff every leading principal minor of order 1..n-1 is nonzero."""
    if not a.is_square():
        raise ShapeMismatch(f"feasibility check needs a square matrix, got {a.shape}")
    for k in range(1, a.rows):
        sub = a.submatrix(range(k), range(k))
        if is_zero(_det_eliminate(sub)):
            return False
    return True


def _det_eliminate(a: Matrix) -> Any:
    """Determinant by elimination with row swaps; internal helper."""
    n = a.rows
    w = [[_lift(x) for x in a.row_values(i)] for i in range(n)]
    sign = 1
    det = None
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not is_zero(w[i][k]):
                piv = i
                break
        if piv is None:
            first = w[0][0]
            return first - first  # exact zero of the right ring
        if piv != k:
            w[k], w[piv] = w[piv], w[k]
            sign = -sign
        pivot = w[k][k]
        det = pivot if det is None else det * pivot
        for i in range(k + 1, n):
            if is_zero(w[i][k]):
                continue
            mult = w[i][k] / pivot
            for j in range(k, n):
                w[i][j] = w[i][j] - mult * w[k][j]
    return det if sign > 0 else -det


# -- Turing factoring PA = L D U R ---------------------------------------


@dataclass(frozen=True)
class TuringFactors:
    p: Tuple[int, ...]
    L: Matrix
    D: Matrix
    U: Matrix
    R: Matrix
    rank: int
    pivot_cols: Tuple[int, ...]

    @property
    def P(self) -> Matrix:
        return permutation_matrix(list(self.p))


def turing(a: Matrix) -> TuringFactors:
    """Turing factoring PA = LDUR with R = rref(A).

    Construction: row elimination with exchanges gives PA = L U'; scaling
    the pivot rows of U' to unit pivots gives U' = D V; eliminating above
    the pivots gives V = U R with U unit upper triangular.  D carries a 1
    in rows past the rank so it is always invertible.
    """
    m, n = a.rows, a.cols
    w = [[_lift(x) for x in a.row_values(i)] for i in range(m)]
    sample = w[0][0]
    zero = sample - sample
    one = _ring_one(sample)

    p = list(range(m))
    lmults = [[zero] * m for _ in range(m)]
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        piv = None
        for i in range(r, m):
            if not is_zero(w[i][c]):
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            w[r], w[piv] = w[piv], w[r]
            p[r], p[piv] = p[piv], p[r]
            lmults[r], lmults[piv] = lmults[piv], lmults[r]
        pivot = w[r][c]
        for i in range(r + 1, m):
            if is_zero(w[i][c]):
                continue
            mult = w[i][c] / pivot
            lmults[i][r] = mult
            w[i][c] = zero
            for j in range(c + 1, n):
                w[i][j] = w[i][j] - mult * w[r][j]
        pivots.append((r, c))
        r += 1

    rank = len(pivots)
    lentries = []
    for i in range(m):
        for j in range(m):
            if i == j:
                lentries.append(one)
            elif j < i:
                lentries.append(lmults[i][j])
            else:
                lentries.append(zero)
    L = Matrix(m, m, lentries)

    # U' = D V: scale pivot rows to unit pivots
    dvals = [one] * m
    for (ri, ci) in pivots:
        d = w[ri][ci]
        dvals[ri] = d
        w[ri] = [x / d for x in w[ri]]
    D = Matrix(m, m, [dvals[i] if i == j else zero for i in range(m) for j in range(m)])

    # V = U R: eliminate above pivots, accumulating U = prod of inverse ops
    ucols = [[one if i == j else zero for i in range(m)] for j in range(m)]  # columns
    for (ri, ci) in pivots:
        for i in range(ri):
            mult = w[i][ci]
            if is_zero(mult):
                continue
            w[i] = [x - mult * y for x, y in zip(w[i], w[ri])]
            # right-multiply accumulated U by (I + mult * e_i e_ri^T)
            ucols[ri] = [u + mult * v for u, v in zip(ucols[ri], ucols[i])]
    uentries = [ucols[j][i] for i in range(m) for j in range(m)]
    U = Matrix(m, m, uentries)
    R = Matrix.from_rows(w)
    return TuringFactors(tuple(p), L, D, U, R, rank, tuple(c for _, c in pivots))


def _ring_one(sample: Any) -> Any:
    if isinstance(sample, (int, Fraction)):
        return Fraction(1)
    if isinstance(sample, float):
        return 1.0
    if isinstance(sample, complex):
        return 1 + 0j
    if isinstance(sample, GaussianRational):
        return GaussianRational(1)
    o = getattr(sample, "one", None)
    if o is not None:
        return o() if callable(o) else o
    raise InvalidArgument(f"no unit for scalar {type(sample).__name__}")


def rref(a: Matrix) -> Matrix:
    return turing(a).R


def rank(a: Matrix) -> int:
    return turing(a).rank


# -- block LU over noncommutative symbols ---------------------------------


def block_lu_2x2(b: Matrix) -> Tuple[Matrix, Matrix]:
    """L, U with B = L U for a 2x2 matrix of noncommutative expressions.

    The (1,1) entry must be a single symbol (it gets formally inverted);
    no other entry is restricted.
    """
    if b.shape != (2, 2):
        raise ShapeMismatch(f"block LU needs a 2x2 matrix, got {b.shape}")
    b11, b12, b21, b22 = b[0, 0], b[0, 1], b[1, 0], b[1, 1]
    if not isinstance(b11, NCExpr):
        raise InvalidArgument("block LU expects noncommutative-expression entries")
    if len(b11.terms) != 1 or len(b11.terms[0][0]) != 1:
        raise InvalidArgument("the (1,1) block must be a single invertible symbol")
    inv11 = b11.inverse()
    one = NCExpr.const(1)
    zero = NCExpr()
    lower_left = b21 * inv11
    schur = b22 - b21 * inv11 * b12
    L = Matrix(2, 2, [one, zero, lower_left, one])
    U = Matrix(2, 2, [b11, b12, zero, schur])
    return L, U


# -- Schur complement ------------------------------------------------------


def schur_complement(a: Matrix, r: int, c: int) -> Matrix:
    """A22 - A21 A11^{-1} A12 via factoring A11, never forming its inverse."""
    if r != c:
        raise ShapeMismatch(f"leading block must be square, got split ({r}, {c})")
    a11, a12, a21, a22 = block_split(a, r, c)
    try:
        x = solve_square(a11, a12)
    except Singular:
        raise SingularBlock(f"leading {r}x{r} block is singular") from None
    return a22 - matmul(a21, x)


def solve_square(a: Matrix, b: Matrix) -> Matrix:
    """Solve A X = B for square nonsingular A (B may have many columns)."""
    if not a.is_square():
        raise ShapeMismatch(f"square solve on {a.shape}")
    if a.rows != b.rows:
        raise ShapeMismatch(f"solve: A is {a.shape}, B is {b.shape}")
    f = plu(a, "partial")
    n = a.rows
    for k in range(n):
        if is_zero(f.U[k, k]):
            raise Singular("matrix is singular")
    pb = permute_rows(b, list(f.p))
    cols = []
    for j in range(b.cols):
        y = _forward_unit(f.L, pb.col_values(j))
        x = _back_sub(f.U, y)
        cols.append(x)
    e = [cols[j][i] for i in range(n) for j in range(b.cols)]
    return Matrix(n, b.cols, e)


def _forward_unit(L: Matrix, rhs: Tuple[Any, ...]) -> List[Any]:
    n = L.rows
    y: List[Any] = [None] * n
    for i in range(n):
        acc = rhs[i]
        for j in range(i):
            acc = acc - L[i, j] * y[j]
        y[i] = acc
    return y


def _back_sub(U: Matrix, y: List[Any]) -> List[Any]:
    n = U.rows
    x: List[Any] = [None] * n
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for j in range(i + 1, n):
            acc = acc - U[i, j] * x[j]
        x[i] = acc / U[i, i]
    return x


def inverse(a: Matrix) -> Matrix:
    """A^{-1} for square nonsingular A (column-by-column solve)."""
    if not a.is_square():
        raise ShapeMismatch(f"inverse of non-square {a.shape}")
    sample = _lift(a[0, 0])
    one = _ring_one(sample)
    zero = sample - sample
    eye = Matrix(a.rows, a.rows, [one if i == j else zero for i in range(a.rows) for j in range(a.rows)])
    return solve_square(a, eye)


# -- QR --------------------------------------------------------------------


@dataclass(frozen=True)
class QRFactors:
    Q: Matrix
    R: Matrix
    mode: str


def qr(a: Matrix, mode: str = "householder-double") -> QRFactors:
    if a.rows < a.cols:
        raise ShapeMismatch(f"QR needs rows >= cols, got {a.shape}")
    if mode == "householder-double":
        return _qr_householder(a)
    if mode == "mgs-exact":
        return _qr_mgs_exact(a)
    raise InvalidArgument(f"unknown QR mode {mode!r}")


def _qr_householder(a: Matrix) -> QRFactors:
    m, n = a.rows, a.cols
    r = [[float(x) for x in a.row_values(i)] for i in range(m)]
    qt = [[1.0 if i == j else 0.0 for j in range(m)] for i in range(m)]  # accumulates Q^T
    for k in range(n):
        norm = math.sqrt(sum(r[i][k] ** 2 for i in range(k, m)))
        if norm == 0.0:
            continue
        alpha = -norm if r[k][k] >= 0 else norm
        v = [0.0] * m
        v[k] = r[k][k] - alpha
        for i in range(k + 1, m):
            v[i] = r[i][k]
        vnorm2 = sum(t * t for t in v)
        if vnorm2 == 0.0:
            continue
        for j in range(k, n):
            dot = sum(v[i] * r[i][j] for i in range(k, m))
            f = 2.0 * dot / vnorm2
            for i in range(k, m):
                r[i][j] -= f * v[i]
        for j in range(m):
            dot = sum(v[i] * qt[i][j] for i in range(k, m))
            f = 2.0 * dot / vnorm2
            for i in range(k, m):
                qt[i][j] -= f * v[i]
    # thin factors; flip signs so R's diagonal is nonnegative
    for k in range(n):
        if r[k][k] < 0:
            for j in range(n):
                r[k][j] = -r[k][j]
            for j in range(m):
                qt[k][j] = -qt[k][j]
    q_thin = [[qt[j][i] for j in range(n)] for i in range(m)]
    r_thin = [[r[i][j] if j >= i else 0.0 for j in range(n)] for i in range(n)]
    return QRFactors(Matrix.from_rows(q_thin), Matrix.from_rows(r_thin), "householder-double")


def _qr_mgs_exact(a: Matrix) -> QRFactors:
    """Gram-Schmidt without normalization: Q has orthogonal rational columns,
    R is unit upper triangular, and Q^T Q is diagonal with positive entries."""
    a = lift_matrix(a)
    m, n = a.rows, a.cols
    sample = a[0, 0]
    one = _ring_one(sample)
    zero = sample - sample
    qcols: List[List[Any]] = []
    rrows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for j in range(n):
        v = list(a.col_values(j))
        for k in range(j):
            qk = qcols[k]
            num = _dot_conj(qk, v)
            den = _dot_conj(qk, qk)
            coef = num / den
            rrows[k][j] = coef
            v = [x - coef * y for x, y in zip(v, qk)]
        if all(is_zero(x) for x in v):
            raise RankDeficient(f"column {j} is dependent on earlier columns", col=j)
        qcols.append(v)
    q_entries = [qcols[j][i] for i in range(m) for j in range(n)]
    return QRFactors(Matrix(m, n, q_entries), Matrix.from_rows(rrows), "mgs-exact")


def _dot_conj(u: List[Any], v: List[Any]) -> Any:
    acc = None
    for x, y in zip(u, v):
        xc = x.conjugate() if isinstance(x, GaussianRational) else x
        t = xc * y
        acc = t if acc is None else acc + t
    return acc


# -- symmetric factorings ---------------------------------------------------


@dataclass(frozen=True)
class LDLTFactors:
    L: Matrix
    Dg: Matrix


def ldlt(a: Matrix) -> LDLTFactors:
    """Exact A = L Dg L^T by the recursive one-step-then-Schur construction."""
    _require_symmetric(a)
    a = lift_matrix(a)
    lrows, dvals = _ldlt_rec(a, 0)
    n = a.rows
    sample = a[0, 0]
    zero = sample - sample
    L = Matrix.from_rows([[lrows[i][j] if j <= i else zero for j in range(n)] for i in range(n)])
    Dg = Matrix(n, n, [dvals[i] if i == j else zero for i in range(n) for j in range(n)])
    return LDLTFactors(L, Dg)


def _ldlt_rec(a: Matrix, k: int) -> Tuple[List[List[Any]], List[Any]]:
    n = a.rows
    sample = a[0, 0]
    one = _ring_one(sample)
    d = a[0, 0]
    if n == 1:
        return [[one]], [d]
    if is_zero(d):
        raise ZeroPivot(k, f"zero pivot at step {k}: exact LDL^T needs nonzero leading minors")
    col = [a[i, 0] / d for i in range(1, n)]
    schur_entries = []
    for i in range(1, n):
        for j in range(1, n):
            schur_entries.append(a[i, j] - col[i - 1] * d * col[j - 1])
    sub_l, sub_d = _ldlt_rec(Matrix(n - 1, n - 1, schur_entries), k + 1)
    lrows = [[one]]
    for i in range(1, n):
        lrows.append([col[i - 1]] + sub_l[i - 1])
    return lrows, [d] + sub_d


def cholesky(a: Matrix) -> Matrix:
    """Double-precision A = L L^T; NotPositiveDefinite(k) on a bad pivot."""
    _require_symmetric(a, tol=1e-12)
    n = a.rows
    w = [[float(a[i, j]) for j in range(n)] for i in range(n)]
    L = [[0.0] * n for _ in range(n)]
    for k in range(n):
        s = w[k][k] - sum(L[k][j] ** 2 for j in range(k))
        if s <= 0.0:
            raise NotPositiveDefinite(k)
        L[k][k] = math.sqrt(s)
        for i in range(k + 1, n):
            t = w[i][k] - sum(L[i][j] * L[k][j] for j in range(k))
            L[i][k] = t / L[k][k]
    return Matrix.from_rows(L)


def _require_symmetric(a: Matrix, tol: float = 0.0):
    if not a.is_square():
        raise ShapeMismatch(f"symmetric factoring of non-square {a.shape}")
    for i in range(a.rows):
        for j in range(i + 1, a.cols):
            x, y = a[i, j], a[j, i]
            if tol and isinstance(x, float):
                scale = max(abs(x), abs(y), 1.0)
                if abs(x - y) > tol * scale:
                    raise InvalidArgument(f"matrix is not symmetric at ({i}, {j})")
            elif x != y:
                raise InvalidArgument(f"matrix is not symmetric at ({i}, {j})")


# -- least squares -----------------------------------------------------------


def lstsq(a: Matrix, b: Matrix) -> Tuple[Matrix, float]:
    """Minimize ||Ax - b||_2.

    Double entries go through Householder QR (quietly, whatever the rank,
    matching the way numeric systems just answer).  Exact entries solve
    the normal equations A^T A x = A^T b and raise RankDeficient when the
    columns are dependent.
    """
    if a.rows != b.rows or b.cols != 1:
        raise ShapeMismatch(f"lstsq: A is {a.shape}, b is {b.shape}")
    if isinstance(a[0, 0], (float, complex)):
        return _lstsq_double(a, b)
    at = a.conjugate_transpose() if isinstance(a[0, 0], GaussianRational) else a.transpose()
    ata = matmul(at, a)
    atb = matmul(at, b)
    try:
        x = solve_square(ata, atb)
    except Singular:
        raise RankDeficient("normal equations are singular: columns are dependent") from None
    resid = b - matmul(a, x)
    s = 0.0
    for v in resid.entries():
        if isinstance(v, GaussianRational):
            s += float(v.norm())
        else:
            s += float(v) ** 2
    return x, math.sqrt(s)


def _lstsq_double(a: Matrix, b: Matrix) -> Tuple[Matrix, float]:
    f = _qr_householder(a)
    qtb = matmul(f.Q.transpose(), b)
    n = a.cols
    x: List[float] = [0.0] * n
    for i in range(n - 1, -1, -1):
        acc = qtb[i, 0]
        for j in range(i + 1, n):
            acc -= f.R[i, j] * x[j]
        rii = f.R[i, i]
        x[i] = acc / rii if rii != 0.0 else 0.0
    xm = Matrix.column(x)
    resid = b - matmul(a, xm)
    rn = math.sqrt(sum(float(v) ** 2 for v in resid.entries()))
    return xm, rn


def project_colspace(a: Matrix, b: Matrix) -> Matrix:
    """Projection of b onto the column space of A.

    Well-defined for any A: exact inputs are first cut down to their
    pivot columns, so a rank-deficient A (a plane in 3-space, say) still
    projects cleanly.
    """
    if isinstance(a[0, 0], (float, complex)):
        x, _ = lstsq(a, b)
        return matmul(a, x)
    basis_cols = turing(a).pivot_cols
    if not basis_cols:
        return Matrix(b.rows, 1, [b[0, 0] - b[0, 0] for _ in range(b.rows)])
    basis = a.submatrix(range(a.rows), basis_cols)
    x, _ = lstsq(basis, b)
    return matmul(basis, x)


# -- solve --------------------------------------------------------------------


@dataclass(frozen=True)
class SolveResult:
    kind: str  # "unique" | "particular" | "inconsistent"
    x: Optional[Matrix] = None
    nullspace: Tuple[Matrix, ...] = ()
    witness_row: Optional[int] = None
    witness: Optional[Tuple[Any, ...]] = None


def solve(a: Matrix, b: Matrix, method: str = "turing") -> SolveResult:
    """Describe the full solution set of A x = b.

    method "lu" handles square nonsingular systems only (Singular
    otherwise); "turing" handles any shape, returning a particular
    solution plus a nullspace basis, or an inconsistency witness row.
    """
    if a.rows != b.rows or b.cols != 1:
        raise ShapeMismatch(f"solve: A is {a.shape}, b is {b.shape}")
    if method == "lu":
        if not a.is_square():
            raise Singular(f"lu solve needs a square matrix, got {a.shape}")
        x = solve_square(a, b)
        return SolveResult("unique", x=x)
    if method != "turing":
        raise InvalidArgument(f"unknown solve method {method!r}")

    aug = hstack(a, b)
    t = turing(aug)
    R = t.R
    n = a.cols
    pivot_cols = list(t.pivot_cols)
    if n in pivot_cols:
        i = pivot_cols.index(n)
        return SolveResult("inconsistent", witness_row=i, witness=R.row_values(i))
    sample = _lift(a[0, 0])
    one = _ring_one(sample)
    zero = sample - sample
    piv_of_col = {c: r for r, c in enumerate(pivot_cols)}
    xs = [zero] * n
    for c, r in piv_of_col.items():
        xs[c] = R[r, n]
    free_cols = [j for j in range(n) if j not in piv_of_col]
    basis = []
    for fcol in free_cols:
        v = [zero] * n
        v[fcol] = one
        for c, r in piv_of_col.items():
            v[c] = -R[r, fcol]
        basis.append(Matrix.column(v))
    if not free_cols:
        return SolveResult("unique", x=Matrix.column(xs))
    return SolveResult("particular", x=Matrix.column(xs), nullspace=tuple(basis))
