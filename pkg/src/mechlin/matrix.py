"""Dense matrices generic over a scalar ring.

A matrix is an immutable row-major block of scalars.  There is no
separate vector type: column vectors are n x 1 matrices and row vectors
are 1 x n matrices, everywhere.  Scalars only need ring arithmetic
(+, -, *, equality, truthiness for zero tests); algorithms that divide
are the ones that say so.

Multiplication respects operand order entrywise, so matrices over the
noncommutative expression ring multiply correctly in every mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, List, Sequence, Tuple

from .errors import InvalidArgument, ShapeMismatch
from .scalars import GaussianRational

Shape = Tuple[int, int]


def _conj(x: Any) -> Any:
    if isinstance(x, (int, Fraction)):
        return x
    c = getattr(x, "conjugate", None)
    if c is None:
        raise InvalidArgument(f"scalar {type(x).__name__} has no conjugation")
    return c()


class Matrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Sequence[Any]):
        if rows < 1 or cols < 1:
            raise ShapeMismatch(f"matrix shape ({rows}, {cols}) must be positive")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Any]]) -> "Matrix":
        if not rows or not rows[0]:
            raise ShapeMismatch("from_rows needs at least one row and column")
        ncols = len(rows[0])
        flat: List[Any] = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch(f"ragged rows: {len(r)} vs {ncols}")
            flat.extend(r)
        return Matrix(len(rows), ncols, flat)

    @staticmethod
    def column(values: Sequence[Any]) -> "Matrix":
        return Matrix(len(values), 1, list(values))

    @staticmethod
    def identity(n: int, one: Any = None, zero: Any = None) -> "Matrix":
        one = Fraction(1) if one is None else one
        zero = Fraction(0) if zero is None else zero
        e = [one if i == j else zero for i in range(n) for j in range(n)]
        return Matrix(n, n, e)

    @staticmethod
    def zeros(rows: int, cols: int, zero: Any = None) -> "Matrix":
        zero = Fraction(0) if zero is None else zero
        return Matrix(rows, cols, [zero] * (rows * cols))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> Shape:
        return (self.rows, self.cols)

    def __getitem__(self, ij: Tuple[int, int]) -> Any:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._e[i * self.cols + j]

    def row_values(self, i: int) -> Tuple[Any, ...]:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col_values(self, j: int) -> Tuple[Any, ...]:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    def col(self, j: int) -> "Matrix":
        return Matrix(self.rows, 1, self.col_values(j))

    def row(self, i: int) -> "Matrix":
        return Matrix(1, self.cols, self.row_values(i))

    def to_rows(self) -> List[List[Any]]:
        return [list(self.row_values(i)) for i in range(self.rows)]

    def entries(self) -> Tuple[Any, ...]:
        return self._e

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_column(self) -> bool:
        return self.cols == 1

    # -- functional edits ------------------------------------------------

    def with_entry(self, i: int, j: int, v: Any) -> "Matrix":
        e = list(self._e)
        e[i * self.cols + j] = v
        return Matrix(self.rows, self.cols, e)

    def map(self, f: Callable[[Any], Any]) -> "Matrix":
        return Matrix(self.rows, self.cols, [f(x) for x in self._e])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        e = [self[i, j] for i in row_idx for j in col_idx]
        return Matrix(len(row_idx), len(col_idx), e)

    def minor(self, drop_row: int, drop_col: int) -> "Matrix":
        rows = [i for i in range(self.rows) if i != drop_row]
        cols = [j for j in range(self.cols) if j != drop_col]
        return self.submatrix(rows, cols)

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", what: str):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{what}: shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "matrix addition")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "matrix subtraction")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, s: Any) -> "Matrix":
        """Left scalar multiple s*A (order matters for NC scalars)."""
        return Matrix(self.rows, self.cols, [s * a for a in self._e])

    def scale_right(self, s: Any) -> "Matrix":
        return Matrix(self.rows, self.cols, [a * s for a in self._e])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return matmul(self, other)
        return self.scale_right(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return matmul(self, other)

    def transpose(self) -> "Matrix":
        e = [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, e)

    def conjugate_transpose(self) -> "Matrix":
        e = [_conj(self[i, j]) for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, e)

    def trace(self) -> Any:
        if not self.is_square():
            raise ShapeMismatch(f"trace of non-square {self.shape}")
        t = self[0, 0]
        for i in range(1, self.rows):
            t = t + self[i, i]
        return t

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for a, b in zip(self._e, other._e))

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        body = ", ".join(str(list(map(str, self.row_values(i)))) for i in range(self.rows))
        return f"Matrix[{body}]"

    def __str__(self):
        cells = [[str(x) for x in self.row_values(i)] for i in range(self.rows)]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for r in cells:
            lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]")
        return "\n".join(lines)


def matmul(a: Matrix, b: Matrix, mode: str = "dot") -> Matrix:
    """Matrix product computed one of four ways; all agree entrywise.

    Modes: "dot" (rows of A against columns of B), "columns" (A applied
    to each column of B), "rows" (rows of A against B), "outer" (sum of
    outer products of A's columns with B's rows).  Every mode forms the
    products A[i,k]*B[k,j] in that operand order.
    """
    if a.cols != b.rows:
        raise ShapeMismatch(f"matmul: inner dims {a.shape} x {b.shape}")
    m, n, p = a.rows, a.cols, b.cols

    if mode == "dot":
        e = []
        for i in range(m):
            for j in range(p):
                acc = None
                for k in range(n):
                    t = a[i, k] * b[k, j]
                    acc = t if acc is None else acc + t
                e.append(acc)
        return Matrix(m, p, e)

    if mode == "columns":
        cols: List[Tuple[Any, ...]] = []
        for j in range(p):
            acc_col = None
            for k in range(n):
                scaled = tuple(a[i, k] * b[k, j] for i in range(m))
                if acc_col is None:
                    acc_col = scaled
                else:
                    acc_col = tuple(x + y for x, y in zip(acc_col, scaled))
            cols.append(acc_col)
        e = [cols[j][i] for i in range(m) for j in range(p)]
        return Matrix(m, p, e)

    if mode == "rows":
        rows_out: List[Tuple[Any, ...]] = []
        for i in range(m):
            acc_row = None
            for k in range(n):
                scaled = tuple(a[i, k] * b[k, j] for j in range(p))
                if acc_row is None:
                    acc_row = scaled
                else:
                    acc_row = tuple(x + y for x, y in zip(acc_row, scaled))
            rows_out.append(acc_row)
        e = [x for r in rows_out for x in r]
        return Matrix(m, p, e)

    if mode == "outer":
        acc_m: List[Any] = [None] * (m * p)
        for k in range(n):
            for i in range(m):
                aik = a[i, k]
                for j in range(p):
                    t = aik * b[k, j]
                    idx = i * p + j
                    acc_m[idx] = t if acc_m[idx] is None else acc_m[idx] + t
        return Matrix(m, p, acc_m)

    raise InvalidArgument(f"unknown matmul mode {mode!r}")


# -- blocks ---------------------------------------------------------------


def block_split(a: Matrix, r: int, c: int) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Split at interior indices: A11 is r x c."""
    if not (1 <= r < a.rows and 1 <= c < a.cols):
        raise ShapeMismatch(f"split ({r}, {c}) not interior to {a.shape}")
    top = range(r)
    bot = range(r, a.rows)
    left = range(c)
    right = range(c, a.cols)
    return (
        a.submatrix(top, left),
        a.submatrix(top, right),
        a.submatrix(bot, left),
        a.submatrix(bot, right),
    )


def block_join(a11: Matrix, a12: Matrix, a21: Matrix, a22: Matrix) -> Matrix:
    if a11.rows != a12.rows or a21.rows != a22.rows:
        raise ShapeMismatch("block rows disagree")
    if a11.cols != a21.cols or a12.cols != a22.cols:
        raise ShapeMismatch("block cols disagree")
    top = hstack(a11, a12)
    bot = hstack(a21, a22)
    return vstack(top, bot)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ShapeMismatch(f"hstack: {a.shape} next to {b.shape}")
    e = []
    for i in range(a.rows):
        e.extend(a.row_values(i))
        e.extend(b.row_values(i))
    return Matrix(a.rows, a.cols + b.cols, e)


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise ShapeMismatch(f"vstack: {a.shape} on top of {b.shape}")
    return Matrix(a.rows + b.rows, a.cols, list(a.entries()) + list(b.entries()))


def augment(a: Matrix, b: Matrix) -> Matrix:
    return hstack(a, b)


def sym_matrix(n: int, prefix: str = "a") -> Matrix:
    """Fully symbolic n x n matrix over the commutative symbol ring."""
    from .symexpr import SymExpr

    e = [SymExpr.sym(f"{prefix}{i + 1}{j + 1}") for i in range(n) for j in range(n)]
    return Matrix(n, n, e)
