"""Elimination over matrices whose entries depend on one parameter.

parametric_rref returns a case tree: a generic leaf that assumes every
pivot stays nonzero, plus one leaf per irreducible pivot factor that can
vanish.  Linear factors pin the parameter to a rational value and the
leaf is recomputed from scratch at that value; nonlinear irreducible
factors are kept symbolically and elimination runs in the quotient field
Q[a]/(q), with the leaf flagged generic_over_constraint.

Cost grows with the number of distinct vanishing factors, so the inputs
are capped at 4x4 with entry degree at most 4.

sympy is used here for one job only: factoring univariate rational
polynomials into irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from .determinant import det_laplace
from .errors import ConstructionError, InvalidArgument, ShapeMismatch
from .factor import rref as plain_rref
from .matrix import Matrix
from .polys import Poly, RatFunc, parse_poly

EQ = "=0"
NE = "!=0"

EntryLike = Union[Poly, RatFunc, int, Fraction, str]


def _as_poly(x: EntryLike, var: str) -> Poly:
    if isinstance(x, Poly):
        p = x
    elif isinstance(x, RatFunc):
        if x.den.degree != 0:
            raise InvalidArgument("parametric entries must be polynomials")
        p = x.num
    elif isinstance(x, str):
        p = parse_poly(x, var=None)
    else:
        p = Poly((x,), var)
    if not p.is_constant() and p.var != var:
        raise InvalidArgument(f"entry uses variable {p.var!r}, expected {var!r}")
    for c in p.coeffs:
        if c.im != 0:
            raise InvalidArgument("parametric entries take rational coefficients")
    return p.with_var(var)


@dataclass(frozen=True)
class ParamMatrix:
    """A matrix of polynomials in one shared parameter."""

    matrix: Matrix
    param: str = "a"

    @staticmethod
    def from_rows(rows: Sequence[Sequence[EntryLike]], param: str = None) -> "ParamMatrix":
        if param is None:
            for row in rows:
                for x in row:
                    if isinstance(x, Poly) and not x.is_constant():
                        param = x.var
                        break
                    if isinstance(x, str):
                        probe = parse_poly(x, var=None)
                        if not probe.is_constant():
                            param = probe.var
                            break
                if param:
                    break
            param = param or "a"
        lifted = [[_as_poly(x, param) for x in row] for row in rows]
        return ParamMatrix(Matrix.from_rows(lifted), param)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def max_degree(self) -> int:
        return max((e.degree for e in self.matrix.entries()), default=-1)


Constraint = Tuple[Poly, str]  # (irreducible monic polynomial, EQ or NE)


@dataclass(frozen=True)
class Condition:
    constraints: Tuple[Constraint, ...] = ()

    def holds_at(self, a0: Fraction) -> bool:
        for q, kind in self.constraints:
            v = q.eval(Fraction(a0))
            if kind == EQ and v != 0:
                return False
            if kind == NE and v == 0:
                return False
        return True

    def __str__(self):
        if not self.constraints:
            return "always"
        bits = [f"{q} {'= 0' if kind == EQ else '!= 0'}" for q, kind in self.constraints]
        return " and ".join(bits)


@dataclass(frozen=True)
class Leaf:
    condition: Condition
    rref: Matrix  # entries are RatFunc
    rank: int
    det: Optional[RatFunc] = None
    note: str = ""


@dataclass(frozen=True)
class CaseTree:
    param: str
    leaves: Tuple[Leaf, ...] = field(default_factory=tuple)

    def leaf_for(self, a0: Fraction) -> Leaf:
        hits = [lf for lf in self.leaves if lf.condition.holds_at(a0)]
        if len(hits) != 1:
            raise InvalidArgument(
                f"{self.param}={a0} matched {len(hits)} leaves; case tree must match exactly one"
            )
        return hits[0]


# -- factorization (the one sympy call site) ---------------------------------


def _irreducible_factors(p: Poly) -> List[Poly]:
    """Monic irreducible factors of p over Q that involve the parameter."""
    x = sympy.Symbol(p.var)
    expr = sympy.Integer(0)
    for i, c in enumerate(p.coeffs):
        expr += sympy.Rational(c.re.numerator, c.re.denominator) * x**i
    _, pairs = sympy.factor_list(sympy.Poly(expr, x))
    out = []
    for fac, _mult in pairs:
        coeffs = sympy.Poly(fac, x).all_coeffs()  # highest first
        cs = [Fraction(c.p, c.q) for c in reversed(coeffs)]
        q = Poly(cs, p.var).monic()
        if q.degree >= 1:
            out.append(q)
    out.sort(key=_poly_key)
    return out


def _poly_key(q: Poly):
    return (q.degree, tuple((c.re.numerator, c.re.denominator) for c in q.coeffs))


# -- quotient-field arithmetic for nonlinear constraints ----------------------


def _poly_invmod(p: Poly, q: Poly) -> Poly:
    """Inverse of p modulo the irreducible q, by extended Euclid."""
    r0, r1 = q, p % q
    s0, s1 = q.zero(), q.one()
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        raise ConstructionError(f"{p} is not invertible modulo {q}")
    return (s0 / r0.leading()) % q


# -- the case-splitting elimination -------------------------------------------


def parametric_det(m: ParamMatrix) -> Poly:
    """Determinant as an exact polynomial in the parameter."""
    if not m.matrix.is_square():
        raise ShapeMismatch(f"determinant of non-square {m.shape}")
    return det_laplace(m.matrix)


def specialize(m: ParamMatrix, a0) -> Matrix:
    """Substitute a rational value for the parameter."""
    a0 = Fraction(a0)
    return m.matrix.map(lambda p: p.eval(a0))


def specialize_leaf(tree: CaseTree, a0) -> Leaf:
    """The unique leaf whose condition a0 satisfies."""
    return tree.leaf_for(Fraction(a0))


def _guard(m: ParamMatrix):
    r, c = m.shape
    if r > 4 or c > 4:
        raise InvalidArgument(f"parametric elimination is capped at 4x4, got {r}x{c}")
    if m.max_degree() > 4:
        raise InvalidArgument("parametric entries are capped at degree 4")


def parametric_rref(m: ParamMatrix) -> CaseTree:
    _guard(m)
    var = m.param
    det_poly = parametric_det(m) if m.matrix.is_square() else None

    work = [[RatFunc(p) for p in m.matrix.row_values(i)] for i in range(m.matrix.rows)]
    nrows, ncols = m.shape
    assumed_ne: List[Poly] = []
    zero_leaves: List[Leaf] = []

    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, nrows) if not work[i][c].is_zero()]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (work[i][c].num.degree, i))
        for q in _irreducible_factors(work[piv][c].num):
            if any(q == p for p in assumed_ne):
                continue
            zero_leaves.append(_vanishing_leaf(m, q, det_poly))
            assumed_ne.append(q)
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(nrows):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break

    generic = Leaf(
        condition=Condition(tuple((q, NE) for q in assumed_ne)),
        rref=Matrix.from_rows(work),
        rank=r,
        det=RatFunc(det_poly) if det_poly is not None else None,
    )

    generic, kept = _merge(generic, zero_leaves)
    leaves = [generic] + kept
    leaves.sort(key=lambda lf: (sum(1 for _, k in lf.condition.constraints if k == EQ),
                                [_poly_key(q) for q, _ in lf.condition.constraints]))
    tree = CaseTree(var, tuple(leaves))
    _cross_check(tree, det_poly, m)
    return tree


def _vanishing_leaf(m: ParamMatrix, q: Poly, det_poly: Optional[Poly]) -> Leaf:
    if q.degree == 1:
        root = -q.coeffs[0].re / q.coeffs[1].re
        flat = specialize(m, root)
        red = plain_rref(flat)
        rk = sum(1 for i in range(red.rows) if any(red[i, j] != 0 for j in range(red.cols)))
        rr = red.map(lambda v: RatFunc(Poly((v,), m.param)))
        dv = None
        if det_poly is not None:
            dv = RatFunc(Poly((det_poly.eval(root),), m.param))
        return Leaf(Condition(((q, EQ),)), rr, rk, dv)
    return _quotient_leaf(m, q, det_poly)


def _quotient_leaf(m: ParamMatrix, q: Poly, det_poly: Optional[Poly]) -> Leaf:
    """Eliminate over the field Q[a]/(q); exact for every root of q."""
    rows = [[p % q for p in m.matrix.row_values(i)] for i in range(m.matrix.rows)]
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = _poly_invmod(rows[r][c], q)
        rows[r] = [(x * inv) % q for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    rr = Matrix.from_rows([[RatFunc(p) for p in row] for row in rows])
    dv = RatFunc(det_poly % q) if det_poly is not None else None
    return Leaf(Condition(((q, EQ),)), rr, r, dv, note="generic_over_constraint")


def _merge(generic: Leaf, zero_leaves: List[Leaf]) -> Tuple[Leaf, List[Leaf]]:
    """Drop vanishing-factor leaves whose payload agrees with the generic one."""
    kept: List[Leaf] = []
    drop: List[Poly] = []
    for lf in zero_leaves:
        q = lf.condition.constraints[0][0]
        spec = _specialize_generic(generic, q)
        if spec is not None and spec == lf.rref and generic.rank == lf.rank:
            drop.append(q)
        else:
            kept.append(lf)
    if drop:
        remaining = tuple(cst for cst in generic.condition.constraints if cst[0] not in drop)
        generic = Leaf(Condition(remaining), generic.rref, generic.rank, generic.det)
    return generic, kept


def _specialize_generic(generic: Leaf, q: Poly) -> Optional[Matrix]:
    """Generic rref evaluated on the locus q = 0, or None if a denominator dies."""
    var = q.var
    if q.degree == 1:
        root = -q.coeffs[0].re / q.coeffs[1].re
        out = []
        for v in generic.rref.entries():
            if v.den.eval(root) == 0:
                return None
            out.append(RatFunc(Poly((v.num.eval(root) / v.den.eval(root),), var)))
        g = generic.rref
        return Matrix(g.rows, g.cols, out)
    out = []
    for v in generic.rref.entries():
        den = v.den % q
        if den.is_zero():
            return None
        out.append(RatFunc((v.num % q) * _poly_invmod(den, q) % q))
    g = generic.rref
    return Matrix(g.rows, g.cols, out)


def _cross_check(tree: CaseTree, det_poly: Optional[Poly], m: ParamMatrix):
    """Square nonsingular-somewhere case: splits must be exactly the det factors."""
    if det_poly is None or det_poly.is_zero():
        return
    det_factors = {_poly_key(q) for q in _irreducible_factors(det_poly)}
    split = {
        _poly_key(q)
        for lf in tree.leaves
        for q, kind in lf.condition.constraints
        if kind == EQ
    }
    if det_factors != split:
        raise ConstructionError(
            "case splits disagree with determinant factors: "
            f"split on {sorted(split)}, determinant has {sorted(det_factors)}"
        )
