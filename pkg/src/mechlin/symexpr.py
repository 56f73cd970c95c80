"""Commutative symbolic ring used for term-count demonstrations.

A SymExpr is a multivariate polynomial over the rationals with
monomials stored as sorted symbol tuples.  It exists so the fully
symbolic n x n determinant can be expanded and its terms counted;
nothing here needs division.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

Monomial = Tuple[str, ...]  # sorted, with multiplicity


class SymExpr:
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[Monomial, Fraction]] = ()):
        d: Dict[Monomial, Fraction] = {}
        for m, c in terms:
            m = tuple(sorted(m))
            c = Fraction(c)
            d[m] = d.get(m, Fraction(0)) + c
        object.__setattr__(
            self, "terms", tuple(sorted((m, c) for m, c in d.items() if c != 0))
        )

    def __setattr__(self, name, value):
        raise AttributeError("SymExpr is immutable")

    @staticmethod
    def sym(name: str) -> "SymExpr":
        return SymExpr([((name,), Fraction(1))])

    @staticmethod
    def const(c) -> "SymExpr":
        return SymExpr([((), Fraction(c))])

    def zero(self) -> "SymExpr":
        return SymExpr()

    def one(self) -> "SymExpr":
        return SymExpr.const(1)

    def term_count(self) -> int:
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    @staticmethod
    def _coerce(x: Any) -> "SymExpr":
        if isinstance(x, SymExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return SymExpr.const(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return SymExpr(list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return SymExpr([(m, -c) for m, c in self.terms])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                out.append((m1 + m2, c1 * c2))
        return SymExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            body = "*".join(m) if m else str(abs(c))
            if m and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    __repr__ = __str__
