"""Double-precision eigenvalues and singular values, written out by hand.

eig_qr runs Householder Hessenberg reduction followed by the implicit
double-shift (Francis) QR iteration with deflation; eigenvectors come
from inverse iteration against the original matrix.  svd_jacobi is
one-sided Jacobi.  numpy supplies arrays and elementwise arithmetic;
the factorization logic itself lives here.

Cross-platform bit-exactness is not promised; the stated tolerances are.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import InvalidArgument, NonConvergence, ShapeMismatch
from .generators import gallery3
from .matrix import Matrix
from .scalars import is_zero

_EPS_DEFLATE = 1e-14


def to_ndarray(a: Matrix, dtype=float) -> np.ndarray:
    out = np.empty((a.rows, a.cols), dtype=dtype)
    for i in range(a.rows):
        for j in range(a.cols):
            v = a[i, j]
            if hasattr(v, "im") and not isinstance(v, complex):
                if dtype is complex:
                    out[i, j] = complex(v)
                elif is_zero(v.im):
                    out[i, j] = float(v.re)
                else:
                    raise InvalidArgument("complex entry in a real-only computation")
            else:
                try:
                    out[i, j] = v
                except TypeError:
                    raise InvalidArgument(
                        f"entry at ({i}, {j}) does not convert to {dtype.__name__}"
                    ) from None
    return out


def from_ndarray(arr: np.ndarray) -> Matrix:
    r, c = arr.shape
    return Matrix(r, c, [arr[i, j].item() for i in range(r) for j in range(c)])


# -- Hessenberg reduction -----------------------------------------------------


def hessenberg(a: Matrix) -> Tuple[Matrix, Matrix]:
    """H, Q with Q^T A Q = H, H zero below the first subdiagonal."""
    if not a.is_square():
        raise ShapeMismatch(f"hessenberg of non-square {a.shape}")
    h = to_ndarray(a, float)
    n = h.shape[0]
    q = np.eye(n)
    for k in range(n - 2):
        x = h[k + 1 :, k]
        if float(np.dot(x[1:], x[1:])) == 0.0:
            continue  # column already in Hessenberg shape; no reflection
        normx = math.sqrt(float(np.dot(x, x)))
        v = x.copy()
        v[0] += math.copysign(normx, x[0]) if x[0] != 0 else normx
        vn2 = float(np.dot(v, v))
        if vn2 == 0.0:
            continue
        # H <- P H P with P = I - 2 v v^T / (v^T v) acting on rows/cols k+1..
        h[k + 1 :, :] -= (2.0 / vn2) * np.outer(v, v @ h[k + 1 :, :])
        h[:, k + 1 :] -= (2.0 / vn2) * np.outer(h[:, k + 1 :] @ v, v)
        q[:, k + 1 :] -= (2.0 / vn2) * np.outer(q[:, k + 1 :] @ v, v)
    # clear the below-subdiagonal dust so the shape contract is literal
    for i in range(n):
        for j in range(i - 1):
            h[i, j] = 0.0
    return from_ndarray(h), from_ndarray(q)


# -- Francis double-shift QR ---------------------------------------------------


@dataclass(frozen=True)
class EigResult:
    eigenvalues: Tuple[complex, ...]
    eigenvectors: Optional[Matrix]
    iterations: int


def eig_qr(a: Matrix, want_vectors: bool = True) -> EigResult:
    """All eigenvalues of a real square matrix, conjugate pairs included.

    Implicit double-shift QR with deflation on the Hessenberg form;
    iteration cap 100*n raises NonConvergence naming the stuck block.
    """
    if not a.is_square():
        raise ShapeMismatch(f"eigenvalues of non-square {a.shape}")
    n = a.rows
    if n > 200:
        raise InvalidArgument("eig_qr is desk scale: n <= 200")
    hq = hessenberg(a)
    h = to_ndarray(hq[0], float)
    values, iters = _qr_iterate(h)
    values = _sorted_eigs(values)
    vectors = None
    if want_vectors:
        acomplex = to_ndarray(a, complex)
        cols = [_inverse_iteration(acomplex, lam) for lam in values]
        vectors = Matrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])
    return EigResult(tuple(values), vectors, iters)


def _qr_iterate(h: np.ndarray) -> Tuple[List[complex], int]:
    n = h.shape[0]
    values: List[complex] = []
    total = 0
    cap = 100 * n
    m = n - 1
    since_deflation = 0
    while m >= 0:
        if m == 0:
            values.append(complex(h[0, 0]))
            m -= 1
            continue
        if _subdiag_small(h, m):
            h[m, m - 1] = 0.0
            values.append(complex(h[m, m]))
            m -= 1
            since_deflation = 0
            continue
        if m == 1 or _subdiag_small(h, m - 1):
            if m > 1:
                h[m - 1, m - 2] = 0.0
            values.extend(_eig2x2(h[m - 1, m - 1], h[m - 1, m], h[m, m - 1], h[m, m]))
            m -= 2
            since_deflation = 0
            continue
        l = m
        while l > 0 and not _subdiag_small(h, l):
            l -= 1
        if l > 0:
            h[l, l - 1] = 0.0
        if total >= cap:
            raise NonConvergence(
                f"QR iteration cap {cap} hit with a {m - l + 1}x{m - l + 1} block remaining"
            )
        exceptional = since_deflation > 0 and since_deflation % 10 == 0
        _francis_step(h, l, m, exceptional)
        total += 1
        since_deflation += 1
    return values, total


def _subdiag_small(h: np.ndarray, i: int) -> bool:
    return abs(h[i, i - 1]) <= _EPS_DEFLATE * (abs(h[i - 1, i - 1]) + abs(h[i, i]))


def _eig2x2(a: float, b: float, c: float, d: float) -> List[complex]:
    tr = a + d
    disc = (a - d) * (a - d) + 4.0 * b * c
    if disc >= 0.0:
        s = math.sqrt(disc)
        return [complex((tr + s) / 2.0), complex((tr - s) / 2.0)]
    s = math.sqrt(-disc)
    return [complex(tr / 2.0, s / 2.0), complex(tr / 2.0, -s / 2.0)]


def _francis_step(h: np.ndarray, l: int, m: int, exceptional: bool):
    """One implicit double-shift sweep on the active block l..m (size >= 3)."""
    if exceptional:
        s1 = abs(h[m, m - 1]) + abs(h[m - 1, m - 2])
        s = 1.5 * s1
        t = s1 * s1
    else:
        s = h[m - 1, m - 1] + h[m, m]
        t = h[m - 1, m - 1] * h[m, m] - h[m - 1, m] * h[m, m - 1]
    x = h[l, l] * h[l, l] + h[l, l + 1] * h[l + 1, l] - s * h[l, l] + t
    y = h[l + 1, l] * (h[l, l] + h[l + 1, l + 1] - s)
    z = h[l + 2, l + 1] * h[l + 1, l]
    for k in range(l, m - 1):
        v, beta = _house_vec(np.array([x, y, z]))
        if beta != 0.0:
            rows = slice(k, k + 3)
            h[rows, :] -= beta * np.outer(v, v @ h[rows, :])
            h[:, rows] -= beta * np.outer(h[:, rows] @ v, v)
        x = h[k + 1, k]
        y = h[k + 2, k]
        z = h[k + 3, k] if k < m - 2 else 0.0
    v, beta = _house_vec(np.array([x, y]))
    if beta != 0.0:
        rows = slice(m - 1, m + 1)
        h[rows, :] -= beta * np.outer(v, v @ h[rows, :])
        h[:, rows] -= beta * np.outer(h[:, rows] @ v, v)
    # restore exact Hessenberg zeros below the bulge path
    for i in range(l, m + 1):
        for j in range(l, i - 1):
            h[i, j] = 0.0


def _house_vec(x: np.ndarray) -> Tuple[np.ndarray, float]:
    """Householder v, beta with (I - beta v v^T) x = +-||x|| e1."""
    normx = math.sqrt(float(np.dot(x, x)))
    if normx == 0.0:
        return x, 0.0
    v = x.astype(float).copy()
    v[0] += math.copysign(normx, x[0]) if x[0] != 0 else normx
    vn2 = float(np.dot(v, v))
    if vn2 == 0.0:
        return v, 0.0
    return v, 2.0 / vn2


def _sorted_eigs(values: List[complex]) -> List[complex]:
    return sorted(values, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


# -- eigenvectors by inverse iteration -----------------------------------------


def _solve_complex(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Dense complex GE with partial pivoting (tiny pivots nudged, not fatal)."""
    n = a.shape[0]
    w = a.astype(complex).copy()
    rhs = b.astype(complex).copy()
    scale = max(float(np.max(np.abs(w))), 1e-300)
    for k in range(n):
        piv = k + int(np.argmax(np.abs(w[k:, k])))
        if abs(w[piv, k]) < 1e-300 * scale:
            w[piv, k] = complex(1e-300 * scale)
        if piv != k:
            w[[k, piv], :] = w[[piv, k], :]
            rhs[[k, piv]] = rhs[[piv, k]]
        for i in range(k + 1, n):
            f = w[i, k] / w[k, k]
            if f != 0:
                w[i, k + 1 :] -= f * w[k, k + 1 :]
                rhs[i] -= f * rhs[k]
    x = np.zeros(n, dtype=complex)
    for i in range(n - 1, -1, -1):
        x[i] = (rhs[i] - np.dot(w[i, i + 1 :], x[i + 1 :])) / w[i, i]
    return x


def _inverse_iteration(a: np.ndarray, lam: complex, steps: int = 3) -> List[complex]:
    n = a.shape[0]
    anorm = max(float(np.max(np.abs(a))), 1.0)
    shift = lam + anorm * 1e-12 * (1 + 1j)  # keep the shifted matrix invertible
    m = a - shift * np.eye(n, dtype=complex)
    v = np.ones(n, dtype=complex) / math.sqrt(n)
    for _ in range(steps):
        v = _solve_complex(m, v)
        nv = math.sqrt(float(np.sum(np.abs(v) ** 2)))
        if nv == 0.0 or not math.isfinite(nv):
            v = np.ones(n, dtype=complex) / math.sqrt(n)
            continue
        v = v / nv
    # deterministic phase: largest component made real positive
    idx = int(np.argmax(np.abs(v)))
    ph = v[idx]
    if abs(ph) > 0:
        v = v * (abs(ph) / ph)
    return [complex(t) for t in v]


# -- one-sided Jacobi SVD --------------------------------------------------------


@dataclass(frozen=True)
class SVDResult:
    U: Matrix
    sigma: Tuple[float, ...]
    V: Matrix
    sweeps: int


def svd_jacobi(a: Matrix) -> SVDResult:
    """A = U diag(sigma) V^T by one-sided Jacobi column rotations."""
    m, n = a.rows, a.cols
    if m < n:
        flipped = svd_jacobi(_transpose_m(a))
        return SVDResult(flipped.V, flipped.sigma, flipped.U, flipped.sweeps)
    w = to_ndarray(a, float)
    v = np.eye(n)
    sweeps = 0
    tol = 1e-15
    while True:
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = float(np.dot(w[:, p], w[:, p]))
                beta = float(np.dot(w[:, q], w[:, q]))
                gamma = float(np.dot(w[:, p], w[:, q]))
                if alpha == 0.0 or beta == 0.0:
                    continue
                # a column this far beneath its partner is pure roundoff, and
                # rotating it stalls once the entries go denormal; flush it
                if alpha <= 1e-250 * beta:
                    w[:, p] = 0.0
                    continue
                if beta <= 1e-250 * alpha:
                    w[:, q] = 0.0
                    continue
                if abs(gamma) <= tol * math.sqrt(alpha * beta):
                    continue
                zeta = (beta - alpha) / (2.0 * gamma)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                wp = w[:, p].copy()
                w[:, p] = c * wp - s * w[:, q]
                w[:, q] = s * wp + c * w[:, q]
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
                rotated = True
        sweeps += 1
        if not rotated:
            break
        if sweeps >= 60:
            raise NonConvergence("Jacobi SVD failed to settle within 60 sweeps")
    sig = [float(math.sqrt(float(np.dot(w[:, j], w[:, j])))) for j in range(n)]
    order = sorted(range(n), key=lambda j: -sig[j])
    sig = [sig[j] for j in order]
    w = w[:, order]
    v = v[:, order]
    u = np.zeros((m, n))
    smax = sig[0] if sig else 0.0
    for j in range(n):
        if sig[j] > smax * 1e-300 and sig[j] > 0.0:
            u[:, j] = w[:, j] / sig[j]
        else:
            u[:, j] = _complete_orthonormal(u, j, m)
    return SVDResult(from_ndarray(u), tuple(sig), from_ndarray(v), sweeps)


def _transpose_m(a: Matrix) -> Matrix:
    return a.transpose()


def _complete_orthonormal(u: np.ndarray, j: int, m: int) -> np.ndarray:
    """A unit vector orthogonal to the first j columns of u."""
    best = None
    best_norm = -1.0
    for k in range(m):
        cand = np.zeros(m)
        cand[k] = 1.0
        for i in range(j):
            cand -= float(np.dot(u[:, i], cand)) * u[:, i]
        nn = math.sqrt(float(np.dot(cand, cand)))
        if nn > best_norm:
            best_norm = nn
            best = cand / nn if nn > 0 else cand
    return best


# -- condition numbers and sensitivity ---------------------------------------------


def two_norm(a: Matrix) -> float:
    return svd_jacobi(a).sigma[0]


def condition_number(a: Matrix) -> float:
    """kappa_2 = sigma_1 / sigma_min; +inf when sigma_min is zero."""
    sig = svd_jacobi(a).sigma
    if sig[-1] == 0.0:
        return math.inf
    return sig[0] / sig[-1]


def eig_condition(a: Matrix, lam: complex) -> float:
    """1/|y^H x| with unit right eigenvector x and left eigenvector y."""
    ac = to_ndarray(a, complex)
    x = np.array(_inverse_iteration(ac, lam))
    y = np.array(_inverse_iteration(ac.conj().T, complex(lam).conjugate()))
    denom = abs(complex(np.dot(y.conj(), x)))
    if denom == 0.0:
        return math.inf
    return 1.0 / denom


def backward_error_eig(a: Matrix, lam: complex, x: Matrix) -> float:
    """||Ax - lam x||_2 / (||A||_2 ||x||_2)."""
    ac = to_ndarray(a, complex)
    xv = np.array([complex(x[i, 0]) for i in range(x.rows)])
    r = ac @ xv - lam * xv
    xn = math.sqrt(float(np.sum(np.abs(xv) ** 2)))
    rn = math.sqrt(float(np.sum(np.abs(r) ** 2)))
    an = two_norm(a)
    if an == 0.0 or xn == 0.0:
        return rn
    return rn / (an * xn)


def gallery3_sensitivity(t: float) -> EigResult:
    """Eigenvalues of gallery3 + t*E11; tiny t moves them dramatically."""
    if abs(t) > 1.0:
        raise InvalidArgument("perturbation limited to |t| <= 1")
    g = to_ndarray(gallery3(), float)
    g[0, 0] += t
    return eig_qr(from_ndarray(g))


def poly_roots_companion(coeffs: List[float]) -> List[complex]:
    """Roots of a monic polynomial via its companion matrix (constant first)."""
    n = len(coeffs) - 1
    if n < 1 or coeffs[-1] == 0:
        raise InvalidArgument("need a monic polynomial of degree >= 1")
    lead = coeffs[-1]
    e = [0.0] * (n * n)
    for i in range(1, n):
        e[i * n + (i - 1)] = 1.0
    for i in range(n):
        e[i * n + (n - 1)] = -coeffs[i] / lead
    return list(eig_qr(Matrix(n, n, e), want_vectors=False).eigenvalues)
