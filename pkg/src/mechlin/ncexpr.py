"""Formal noncommutative expressions: rational combinations of words.

A word is a sequence of atoms (symbol, power) with power in {+1, -1}.
Construction keeps everything in normal form: adjacent x*x^-1 pairs
cancel (free-group reduction), like words merge, zero terms drop, and
terms are kept in lexicographic word order so printing is stable.

Only single-term expressions can be inverted: (c * w)^-1 = (1/c) * w^-1
reverses the word and flips powers.  Inverting a sum is an error; that
restriction is what keeps block elimination honest about which inverses
it actually assumed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

from .errors import DivisionByZero, InvalidArgument

Atom = Tuple[str, int]
Word = Tuple[Atom, ...]


def _word_key(w: Word):
    return tuple((s, 0 if p > 0 else 1) for s, p in w)


def _mul_words(u: Word, v: Word) -> Word:
    i, j = len(u), 0
    while i > 0 and j < len(v) and u[i - 1][0] == v[j][0] and u[i - 1][1] == -v[j][1]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


class NCExpr:
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[Word, Fraction]] = ()):
        d: Dict[Word, Fraction] = {}
        for w, c in terms:
            w = _reduce_word(tuple(w))
            c = Fraction(c)
            d[w] = d.get(w, Fraction(0)) + c
        cleaned = tuple(
            sorted(((w, c) for w, c in d.items() if c != 0), key=lambda t: _word_key(t[0]))
        )
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("NCExpr is immutable")

    @staticmethod
    def sym(name: str) -> "NCExpr":
        return NCExpr([(((name, 1),), Fraction(1))])

    @staticmethod
    def const(c) -> "NCExpr":
        return NCExpr([((), Fraction(c))])

    def zero(self) -> "NCExpr":
        return NCExpr()

    def one(self) -> "NCExpr":
        return NCExpr.const(1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @staticmethod
    def _coerce(x: Any) -> "NCExpr":
        if isinstance(x, NCExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return NCExpr.const(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NCExpr(list(self.terms) + list(o.terms))

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
        return NCExpr([(w, -c) for w, c in self.terms])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = []
        for w1, c1 in self.terms:
            for w2, c2 in o.terms:
                out.append((_mul_words(w1, w2), c1 * c2))
        return NCExpr(out)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self

    def inverse(self) -> "NCExpr":
        """Formal inverse of a single-term expression; sums are rejected."""
        if len(self.terms) != 1:
            if not self.terms:
                raise DivisionByZero("inverse of zero expression")
            raise InvalidArgument("cannot invert a sum of noncommutative terms")
        w, c = self.terms[0]
        inv_word = tuple((s, -p) for s, p in reversed(w))
        return NCExpr([(inv_word, Fraction(1) / c)])

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = NCExpr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"NCExpr({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms:
            if not w:
                body = str(abs(c))
            else:
                factors = [f"{s}^-1" if p < 0 else s for s, p in w]
                wtxt = "*".join(factors)
                mag = abs(c)
                body = wtxt if mag == 1 else f"{mag}*{wtxt}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def _reduce_word(w: Word) -> Word:
    out: list = []
    for a in w:
        if out and out[-1][0] == a[0] and out[-1][1] == -a[1]:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def nc_normalize(e: NCExpr) -> NCExpr:
    """Re-normalize; a no-op for values built through the public API."""
    return NCExpr(list(e.terms))


def nc_sym(name: str) -> NCExpr:
    return NCExpr.sym(name)
