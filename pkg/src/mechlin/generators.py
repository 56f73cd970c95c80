"""Named matrix families, the Cayley transform, and exam-question helpers.

Reproducibility contract: the PRNG is SplitMix64, and each generator kind
draws from its own stream (seed XOR FNV-1a64 of the kind name), so the
same (kind, seed, params) produces the same matrix on any platform or
implementation of this scheme.  Entries are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from .determinant import inverse_exact
from .errors import ConstructionError, InvalidArgument, NotSkewSymmetric
from .factor import solve_square
from .matrix import Matrix

_MASK = (1 << 64) - 1


def _fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & _MASK
    return h


class SplitMix64:
    """Tiny portable PRNG; the sequence is part of the reproducibility contract."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def int_range(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def nonzero_range(self, lo: int, hi: int) -> int:
        # one draw, zero skipped by index mapping (keeps streams aligned)
        if lo > 0 or hi < 0:
            return self.int_range(lo, hi)
        v = lo + self.below(hi - lo)
        return v + 1 if v >= 0 else v


def _rng_for(kind: str, seed: int) -> SplitMix64:
    return SplitMix64((seed & _MASK) ^ _fnv1a64(kind))


KINDS = (
    "circulant",
    "toeplitz",
    "hankel",
    "banded",
    "checkerboard",
    "anti_tridiagonal",
    "spd_random",
    "unimodular_random",
    "gallery3",
)

GALLERY3_ROWS = [[-149, -50, -154], [537, 180, 546], [-27, -9, -25]]


def gallery3() -> Matrix:
    """The classic 3x3 demo matrix with eigenvalues {1,2,3} and wild sensitivity."""
    return Matrix.from_rows([[Fraction(v) for v in row] for row in GALLERY3_ROWS])


def generate(
    kind: str,
    size: Optional[int] = None,
    seed: int = 0,
    first_row: Optional[Sequence[Any]] = None,
    first_col: Optional[Sequence[Any]] = None,
    last_col: Optional[Sequence[Any]] = None,
    lower: int = 1,
    upper: int = 1,
    lo: int = -9,
    hi: int = 9,
    ops: int = 12,
) -> Matrix:
    """Build one of the named families; same arguments, same matrix, always."""
    if kind not in KINDS:
        raise InvalidArgument(f"unknown generator kind {kind!r}")
    rng = _rng_for(kind, seed)

    if kind == "gallery3":
        return gallery3()

    if kind == "circulant":
        row = _row_or_random(first_row, size, rng, lo, hi, "circulant")
        n = len(row)
        return Matrix(n, n, [row[(j - i) % n] for i in range(n) for j in range(n)])

    if kind == "toeplitz":
        row = _row_or_random(first_row, size, rng, lo, hi, "toeplitz")
        n = len(row)
        if first_col is not None:
            col = [Fraction(c) for c in first_col]
            if len(col) != n:
                raise InvalidArgument("toeplitz first_col length must match first_row")
            if col[0] != row[0]:
                raise InvalidArgument("toeplitz corner mismatch between first_row and first_col")
        else:
            col = [row[0]] + [Fraction(rng.int_range(lo, hi)) for _ in range(n - 1)]
        return Matrix(n, n, [row[j - i] if j >= i else col[i - j] for i in range(n) for j in range(n)])

    if kind == "hankel":
        row = _row_or_random(first_row, size, rng, lo, hi, "hankel")
        n = len(row)
        if last_col is not None:
            col = [Fraction(c) for c in last_col]
            if len(col) != n:
                raise InvalidArgument("hankel last_col length must match first_row")
            if col[0] != row[-1]:
                raise InvalidArgument("hankel corner mismatch between first_row and last_col")
        else:
            col = [row[-1]] + [Fraction(rng.int_range(lo, hi)) for _ in range(n - 1)]
        e = []
        for i in range(n):
            for j in range(n):
                s = i + j
                e.append(row[s] if s < n else col[s - n + 1])
        return Matrix(n, n, e)

    n = _need_size(size, kind)

    if kind == "banded":
        if lower < 0 or upper < 0:
            raise InvalidArgument("band widths must be nonnegative")
        e = []
        for i in range(n):
            for j in range(n):
                if -lower <= j - i <= upper:
                    e.append(Fraction(rng.int_range(lo, hi)))
                else:
                    e.append(Fraction(0))
        return Matrix(n, n, e)

    if kind == "checkerboard":
        e = []
        for i in range(n):
            for j in range(n):
                if (i + j) % 2 == 0:
                    e.append(Fraction(rng.nonzero_range(lo, hi)))
                else:
                    e.append(Fraction(0))
        return Matrix(n, n, e)

    if kind == "anti_tridiagonal":
        e = []
        for i in range(n):
            for j in range(n):
                if n - 2 <= i + j <= n:
                    e.append(Fraction(rng.nonzero_range(lo, hi)))
                else:
                    e.append(Fraction(0))
        return Matrix(n, n, e)

    if kind == "spd_random":
        g = [[rng.int_range(lo, hi) for _ in range(n)] for _ in range(n)]
        e = []
        for i in range(n):
            for j in range(n):
                v = sum(g[i][k] * g[j][k] for k in range(n))
                if i == j:
                    v += n
                e.append(Fraction(v))
        return Matrix(n, n, e)

    # unimodular_random: integer elementary ops applied to I
    return _unimodular(n, rng, ops, mult_lo=-3, mult_hi=3)


def _row_or_random(first_row, size, rng: SplitMix64, lo: int, hi: int, kind: str) -> List[Fraction]:
    if first_row is not None:
        row = [Fraction(c) for c in first_row]
        if not row:
            raise InvalidArgument(f"{kind} first_row must be nonempty")
        return row
    n = _need_size(size, kind)
    return [Fraction(rng.int_range(lo, hi)) for _ in range(n)]


def _need_size(size: Optional[int], kind: str) -> int:
    if size is None or size < 1:
        raise InvalidArgument(f"{kind} needs a positive size")
    return size


def _unimodular(n: int, rng: SplitMix64, ops: int, mult_lo: int, mult_hi: int) -> Matrix:
    rows: List[List[Fraction]] = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]
    if ops < 1:
        return Matrix.from_rows(rows)
    for _ in range(ops):
        op = rng.below(3)
        if op == 0 and n > 1:  # swap
            i = rng.below(n)
            j = rng.below(n - 1)
            if j >= i:
                j += 1
            rows[i], rows[j] = rows[j], rows[i]
        else:  # add integer multiple of row j to row i
            i = rng.below(n)
            j = rng.below(n - 1) if n > 1 else 0
            if n > 1 and j >= i:
                j += 1
            m = rng.nonzero_range(mult_lo, mult_hi)
            rows[i] = [a + m * b for a, b in zip(rows[i], rows[j])]
    return Matrix.from_rows(rows)


def cayley(s: Matrix) -> Matrix:
    """Q = (I - S)(I + S)^{-1} for skew-symmetric S; exactly orthogonal."""
    if not s.is_square():
        raise NotSkewSymmetric(f"Cayley input must be square, got {s.shape}")
    st = s.transpose()
    if st != -s:
        raise NotSkewSymmetric("Cayley input must satisfy S^T = -S")
    from .factor import lift_matrix

    s = lift_matrix(s)
    n = s.rows
    eye = Matrix.identity(n)
    x = solve_square(eye + s, eye - s)  # (I+S)^{-1}(I-S)
    # (I-S) and (I+S)^{-1} commute, so either order is the Cayley transform
    return x


def exam_unimodular_question(seed: int = 0) -> Tuple[Matrix, Matrix]:
    """A 3x3 integer unimodular matrix with entries within 9, and its integer inverse."""
    rng = _rng_for("exam_unimodular", seed)
    for _attempt in range(500):
        ops = 6 + rng.below(5)
        a = _unimodular(3, rng, ops, mult_lo=-2, mult_hi=2)
        if max(abs(x) for x in a.entries()) > 9:
            continue
        if a == Matrix.identity(3):
            continue  # too easy an exam question
        inv = inverse_exact(a)  # verifies A * inv = I internally
        if any(x.denominator != 1 for x in inv.entries()):
            raise ConstructionError("unimodular inverse came out non-integer")
        return a, inv
    raise InvalidArgument("could not build an exam question within the retry budget")
