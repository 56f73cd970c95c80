"""Characteristic polynomials and the companion-matrix family.

Conventions fixed here and used by the service and CLI:
  - charpoly means det(lambda*I - A), monic, exact.
  - Frobenius companion: negated coefficients in the LAST COLUMN,
    ones on the subdiagonal.
  - Colleague matrix: tridiagonal-plus-last-row with the 1/2 coupling
    of the Chebyshev three-term recurrence.
  - Height: largest entry magnitude (the flattened infinity norm).

The Mandelbrot companion is built by a recursive two-copies-plus-coupling
block scheme and always re-verified against the exact characteristic
polynomial; a mismatch raises instead of returning a wrong matrix.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from .determinant import det_laplace
from .errors import (
    ConstructionError,
    InvalidArgument,
    NotFound,
    ShapeMismatch,
)
from .factor import _lift, matmul
from .matrix import Matrix
from .polys import Poly
from .scalars import GaussianRational, gaussian_sqrt


# -- characteristic and minimal polynomials ---------------------------------


def charpoly(a: Matrix, var: str = "z", method: Optional[str] = None) -> Poly:
    """Exact monic characteristic polynomial det(var*I - A).

    Symbolic Laplace expansion for n <= 6; the Faddeev-LeVerrier trace
    recursion for larger n (exact, division only by integers).  Entries
    must be exact scalars.
    """
    if not a.is_square():
        raise ShapeMismatch(f"charpoly of non-square {a.shape}")
    if isinstance(a[0, 0], (float, complex)):
        raise InvalidArgument("charpoly needs exact scalars; use the numeric module for doubles")
    n = a.rows
    if method is None:
        method = "laplace" if n <= 6 else "fl"
    if method == "laplace":
        return _charpoly_laplace(a, var)
    if method == "fl":
        return _charpoly_fl(a, var)
    raise InvalidArgument(f"unknown charpoly method {method!r}")


def _charpoly_laplace(a: Matrix, var: str) -> Poly:
    n = a.rows
    lam = Poly((0, 1), var)
    entries = []
    for i in range(n):
        for j in range(n):
            p = Poly((-_lift(a[i, j]),), var)
            if i == j:
                p = p + lam
            entries.append(p)
    return det_laplace(Matrix(n, n, entries))


def _charpoly_fl(a: Matrix, var: str) -> Poly:
    n = a.rows
    a = a.map(_lift)
    m = a
    coeffs: List[Any] = [None] * (n + 1)
    coeffs[n] = Fraction(1)
    m_prev = c_prev = None
    for k in range(1, n + 1):
        if k > 1:
            m = matmul(a, _add_scalar_diag(m_prev, c_prev))
        tr = m.trace()
        ck = -tr / k
        coeffs[n - k] = ck
        m_prev, c_prev = m, ck
    return Poly(coeffs, var)


def _add_scalar_diag(m: Matrix, s: Any) -> Matrix:
    out = m
    for i in range(m.rows):
        out = out.with_entry(i, i, out[i, i] + s)
    return out


def minpoly(a: Matrix, var: str = "z") -> Poly:
    """Exact monic minimal polynomial via the first Krylov dependence of
    vectorized powers I, A, A^2, ..."""
    if not a.is_square():
        raise ShapeMismatch(f"minpoly of non-square {a.shape}")
    a = a.map(_lift)
    n = a.rows
    powers = [Matrix.identity(n, one=_one_like_entry(a), zero=_zero_like_entry(a))]
    while True:
        powers.append(matmul(powers[-1], a))
        k = len(powers) - 1
        # is A^k a combination of lower powers?  solve V c = vec(A^k)
        v_cols = [_vec(p) for p in powers[:-1]]
        target = _vec(powers[-1])
        combo = _solve_combo(v_cols, target)
        if combo is not None:
            coeffs = [-c for c in combo] + [_one_like_entry(a)]
            return Poly(coeffs, var)
        if k > n:
            raise ConstructionError("minimal polynomial search exceeded the order bound")


def is_nonderogatory(a: Matrix) -> bool:
    """True when the minimal polynomial has full degree n."""
    return minpoly(a).degree == a.rows


def _vec(m: Matrix) -> List[Any]:
    return list(m.entries())


def _zero_like_entry(a: Matrix) -> Any:
    s = a[0, 0]
    return s - s


def _one_like_entry(a: Matrix) -> Any:
    from .factor import _ring_one

    return _ring_one(a[0, 0])


def _solve_combo(cols: List[List[Any]], target: List[Any]) -> Optional[List[Any]]:
    """Exact least-structure solve: target = sum c_j cols[j], or None."""
    from .factor import solve as _solve

    m = len(target)
    k = len(cols)
    a = Matrix(m, k, [cols[j][i] for i in range(m) for j in range(k)])
    b = Matrix.column(target)
    res = _solve(a, b, method="turing")
    if res.kind == "inconsistent":
        return None
    return [res.x[i, 0] for i in range(k)]


# -- companion constructions -------------------------------------------------


@dataclass(frozen=True)
class CompanionResult:
    A: Matrix
    B: Optional[Matrix]
    basis: str  # "monomial" | "chebyshev"
    height: Fraction


def height(a: Matrix) -> Fraction:
    """Largest entry magnitude; for Gaussian entries, max(|re|, |im|)."""
    h = Fraction(0)
    for x in a.entries():
        if isinstance(x, GaussianRational):
            h = max(h, abs(x.re), abs(x.im))
        else:
            h = max(h, abs(Fraction(x)))
    return h


def _shrink(c: GaussianRational) -> Any:
    return c.re if c.im == 0 else c


def frobenius_companion(p: Poly) -> CompanionResult:
    """Companion with -coefficients down the last column, subdiagonal ones."""
    n = p.degree
    if n < 1:
        raise InvalidArgument("companion needs degree >= 1")
    if p.leading() != 1:
        raise InvalidArgument("polynomial is not monic; use companion_pencil")
    zero = Fraction(0)
    one = Fraction(1)
    e: List[Any] = [zero] * (n * n)
    for i in range(1, n):
        e[i * n + (i - 1)] = one
    for i in range(n):
        e[i * n + (n - 1)] = _shrink(-p.coeffs[i])
    a = Matrix(n, n, e)
    return CompanionResult(a, None, "monomial", height(a))


def companion_pencil(p: Poly) -> CompanionResult:
    """Pencil (A, B) with det(lambda*B - A) = p exactly, verified symbolically."""
    if p.is_zero():
        raise InvalidArgument("zero polynomial has no companion pencil")
    n = p.degree
    if n < 1:
        raise InvalidArgument("companion pencil needs degree >= 1")
    zero = Fraction(0)
    one = Fraction(1)
    e: List[Any] = [zero] * (n * n)
    for i in range(1, n):
        e[i * n + (i - 1)] = one
    for i in range(n):
        e[i * n + (n - 1)] = _shrink(-p.coeffs[i])
    a = Matrix(n, n, e)
    b = Matrix.identity(n).with_entry(n - 1, n - 1, _shrink(p.leading()))
    check = pencil_charpoly(a, b, p.var)
    if check != p:
        raise ConstructionError("companion pencil failed its symbolic determinant check")
    return CompanionResult(a, b, "monomial", height(a))


def pencil_charpoly(a: Matrix, b: Matrix, var: str = "z") -> Poly:
    """det(var*B - A) over the polynomial ring, by Laplace expansion."""
    n = a.rows
    lam = Poly((0, 1), var)
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(lam * _lift(b[i, j]) - _lift(a[i, j]))
    return det_laplace(Matrix(n, n, entries))


def colleague_chebyshev(coeffs: List[Any]) -> CompanionResult:
    """Colleague matrix for p = sum coeffs[k] * T_k, leading coefficient nonzero.

    Tridiagonal-plus-last-row form; the eigenvalues are the roots of p.
    """
    cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    n = len(cs) - 1
    if n < 1:
        raise InvalidArgument("colleague needs degree >= 1 with nonzero leading coefficient")
    an = cs[-1]
    zero = Fraction(0)
    half = Fraction(1, 2)
    if n == 1:
        a = Matrix(1, 1, [-cs[0] / an])
        return CompanionResult(a, None, "chebyshev", height(a))
    e: List[Any] = [zero] * (n * n)
    e[0 * n + 1] = Fraction(1)
    for k in range(1, n - 1):
        e[k * n + (k - 1)] = half
        e[k * n + (k + 1)] = half
    for j in range(n):
        e[(n - 1) * n + j] = -cs[j] / (2 * an)
    e[(n - 1) * n + (n - 2)] += half
    a = Matrix(n, n, e)
    return CompanionResult(a, None, "chebyshev", height(a))


# -- Mandelbrot family --------------------------------------------------------


def mandelbrot_poly(n: int) -> Poly:
    """p_0 = 0, p_{k+1}(z) = z * p_k(z)^2 + 1; degree 2^(n-1) - 1 for n >= 1."""
    if not (0 <= n <= 8):
        raise InvalidArgument("mandelbrot polynomial index limited to 0..8")
    z = Poly((0, 1), "z")
    p = Poly((), "z")
    for _ in range(n):
        p = z * p * p + 1
    return p


def mandelbrot_companion(n: int) -> CompanionResult:
    """Height-1 companion of p_n, built recursively and verified exactly.

    The block scheme couples two copies of the previous companion through
    one extra row and column; the resulting matrix has entries in
    {-1, 0, 1} and characteristic polynomial p_n.  Verification against
    charpoly is part of the operation.
    """
    if not (2 <= n <= 6):
        raise InvalidArgument("mandelbrot companion index limited to 2..6")
    m = Matrix(1, 1, [Fraction(-1)])
    for _ in range(n - 2):
        m = _mandelbrot_step(m)
    p = mandelbrot_poly(n)
    cp = charpoly(m, var="z")
    if cp != p and cp != -p:
        raise ConstructionError("mandelbrot companion failed its characteristic-polynomial check")
    h = height(m)
    if h != 1:
        raise ConstructionError(f"mandelbrot companion has height {h}, expected 1")
    return CompanionResult(m, None, "monomial", h)


def _mandelbrot_step(m: Matrix) -> Matrix:
    """[[M, 0, -E1d], [ed^T, 0, 0], [0, e1, M]] of order 2d+1."""
    d = m.rows
    zero = Fraction(0)
    one = Fraction(1)
    size = 2 * d + 1
    e: List[Any] = [zero] * (size * size)

    def put(i: int, j: int, v: Any):
        e[i * size + j] = v

    for i in range(d):
        for j in range(d):
            put(i, j, m[i, j])
            put(d + 1 + i, d + 1 + j, m[i, j])
    put(0, size - 1, -one)  # -E_{1,d} block: single -1 in its top-right corner
    put(d, d - 1, one)  # e_d^T row
    put(d + 1, d, one)  # e_1 column
    return Matrix(size, size, e)


# -- minimal-height search -----------------------------------------------------


def min_height_companion_search(p: Poly, hmax: int = 2) -> Tuple[Matrix, Fraction]:
    """Exhaustive search for an integer companion of least height.

    A match must have p as BOTH its characteristic and minimal polynomial
    (a companion represents multiplication by z, which is nonderogatory).
    Scans heights 0..hmax; within a height, entries are enumerated
    lexicographically, so the result is deterministic.  Raises NotFound
    when no matrix within reach works.
    """
    n = p.degree
    if not (1 <= n <= 3):
        raise InvalidArgument("height search limited to degrees 1..3")
    if not (0 <= hmax <= 2):
        raise InvalidArgument("height search limited to hmax <= 2")
    if p.leading() != 1:
        raise InvalidArgument("height search needs a monic polynomial")
    target = []
    for c in p.coeffs:
        if c.im != 0 or c.re.denominator != 1:
            raise InvalidArgument("height search needs integer coefficients")
        target.append(int(c.re))
    for h in range(hmax + 1):
        vals = range(-h, h + 1)
        for entries in itertools.product(vals, repeat=n * n):
            if not _charpoly_int_match(entries, n, target):
                continue
            m = Matrix(n, n, [Fraction(v) for v in entries])
            if minpoly(m).degree == n:
                return m, Fraction(h)
    raise NotFound(f"no integer companion of height <= {hmax} for {p}")


def _charpoly_int_match(e: Tuple[int, ...], n: int, target: List[int]) -> bool:
    """Closed-form charpoly comparison for n <= 3 over plain ints."""
    if n == 1:
        return [-e[0], 1] == target
    if n == 2:
        a, b, c, d = e
        tr = a + d
        det = a * d - b * c
        return [det, -tr, 1] == target
    a, b, c, d, f, g, h_, i, j = e
    tr = a + f + j
    m2 = (a * f - b * d) + (a * j - c * h_) + (f * j - g * i)
    det = a * (f * j - g * i) - b * (d * j - g * h_) + c * (d * i - f * h_)
    return [-det, m2, -tr, 1] == target


# -- small exact eigenvalues ----------------------------------------------------


@dataclass(frozen=True)
class EigExact:
    values: Tuple[GaussianRational, ...]
    remaining: Optional[Poly]
    note: str


def eig_exact_small(a: Matrix) -> EigExact:
    """Exact eigenvalues where the field allows it; partial results are legal.

    2x2 goes through the quadratic formula (Gaussian-rational square roots
    permitted).  Larger matrices get rational-root extraction from the
    characteristic polynomial with deflation; a leftover quadratic is
    also tried exactly; anything else is returned unsolved.
    """
    p = charpoly(a)
    values: List[GaussianRational] = []
    rest = p
    if a.rows == 2:
        got = _solve_quadratic(rest)
        if got is not None:
            return EigExact(_sorted_vals(got), None, "")
        return EigExact((), rest, "irrational eigenvalues; use the numeric path")
    # rational roots first
    roots = _rational_roots(rest)
    for r, mult in roots:
        values.extend([GaussianRational(r)] * mult)
        for _ in range(mult):
            rest = rest // Poly((-r, 1), rest.var)
    if rest.degree == 2:
        got = _solve_quadratic(rest)
        if got is not None:
            values.extend(got)
            rest = rest.one()
    if rest.degree <= 0:
        return EigExact(_sorted_vals(values), None, "")
    return EigExact(
        _sorted_vals(values), rest, "irrational factor left unsolved; use the numeric path"
    )


def _sorted_vals(vals: List[GaussianRational]) -> Tuple[GaussianRational, ...]:
    return tuple(sorted(vals, key=lambda v: (v.re, v.im)))


def _solve_quadratic(p: Poly) -> Optional[List[GaussianRational]]:
    c0, c1, c2 = p.coeffs[0], p.coeffs[1], p.coeffs[2]
    disc = c1 * c1 - 4 * c2 * c0
    root = gaussian_sqrt(disc)
    if root is None:
        return None
    two_a = 2 * c2
    return [(-c1 + root) / two_a, (-c1 - root) / two_a]


def _rational_roots(p: Poly) -> List[Tuple[Fraction, int]]:
    """Rational roots with multiplicity; desk-scale divisor enumeration."""
    try:
        cs = p.real_coeffs()
    except ValueError:
        return []
    if not cs:
        return []
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    # strip powers of the variable: roots at zero
    out: List[Tuple[Fraction, int]] = []
    z_mult = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        z_mult += 1
    if z_mult:
        out.append((Fraction(0), z_mult))
    if len(ints) <= 1:
        return out
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for u in _divisors(a0):
        for v in _divisors(an):
            cands.add(Fraction(u, v))
            cands.add(Fraction(-u, v))
    poly = Poly(ints, p.var)
    for r in sorted(cands):
        mult = 0
        while poly.degree >= 1 and poly.eval(r) == 0:
            poly = poly // Poly((-r, 1), p.var)
            mult += 1
        if mult:
            out.append((r, mult))
    return out


def _divisors(n: int) -> List[int]:
    if n == 0:
        return [1]
    n = abs(n)
    small = []
    big = []
    d = 1
    while d * d <= n and d <= 10**6:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                big.append(n // d)
        d += 1
    return small + big[::-1]
