"""Univariate polynomials and rational functions with exact coefficients.

Coefficients are GaussianRational (so one type serves characteristic
polynomials and complex-root work).  Storage is dense, constant term
first; the zero polynomial is the empty coefficient list and has degree
-1.  Two polynomials in different variables only combine when one of
them is constant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, List, Sequence, Tuple, Union

from .errors import DivisionByZero, ParseError, VariableMismatch
from .scalars import GaussianRational, one_like, rat, rat_str, zero_like

CoeffLike = Union[int, Fraction, GaussianRational]


def _gr(x: CoeffLike) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(Fraction(x))


class Poly:
    """Dense univariate polynomial over the Gaussian rationals."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Sequence[CoeffLike] = (), var: str = "z"):
        cs = [_gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- ring protocol ------------------------------------------------

    def zero(self) -> "Poly":
        return Poly((), self.var)

    def one(self) -> "Poly":
        return Poly((1,), self.var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            return GaussianRational(0)
        return self.coeffs[-1]

    def constant(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else GaussianRational(0)

    def _join_var(self, other: "Poly") -> str:
        if self.var == other.var:
            return self.var
        if self.is_constant():
            return other.var
        if other.is_constant():
            return self.var
        raise VariableMismatch(f"cannot combine {self.var!r} with {other.var!r}")

    @staticmethod
    def _coerce(x: Any, var: str) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return Poly((x,), var)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        var = self._join_var(o)
        n = max(len(self.coeffs), len(o.coeffs))
        cs = [GaussianRational(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] = cs[i] + c
        for i, c in enumerate(o.coeffs):
            cs[i] = cs[i] + c
        return Poly(cs, var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        var = self._join_var(o)
        if not self.coeffs or not o.coeffs:
            return Poly((), var)
        cs = [GaussianRational(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                cs[i + j] = cs[i + j] + a * b
        return Poly(cs, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Poly((1,), self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        var = self._join_var(o)
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(o.coeffs)
        if dq < 0:
            return Poly((), var), self
        quot = [GaussianRational(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(quot, var), Poly(rem[: len(o.coeffs) - 1], var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        # exact scalar division only
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _gr(other)
            if not c:
                raise DivisionByZero("polynomial division by zero scalar")
            return Poly([a / c for a in self.coeffs], self.var)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        if self.is_constant() or o.is_constant():
            return self.coeffs == o.coeffs
        return self.var == o.var and self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_constant():
            return hash(self.coeffs)
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- algebra helpers ----------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs], self.var)

    def eval(self, x: Any) -> Any:
        """Horner evaluation; x may be any ring element (scalar or matrix)."""
        if hasattr(x, "is_square") and hasattr(x, "entries"):
            return self._eval_matrix(x)
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, float, complex)) else type(x)(0)
        acc = None
        for c in reversed(self.coeffs):
            cv: Any = c
            if isinstance(x, (float, complex)):
                cv = complex(c) if (c.im != 0 or isinstance(x, complex)) else float(c.re)
            elif isinstance(x, (int, Fraction)) and c.im == 0:
                cv = c.re
            acc = cv if acc is None else acc * x + cv
        return acc

    def _eval_matrix(self, a: Any) -> Any:
        # constant terms become multiples of I, so p(A) is Cayley-Hamilton ready
        from .matrix import Matrix, matmul

        sample = a[0, 0]
        one = one_like(sample)
        zero = zero_like(sample)
        eye = Matrix.identity(a.rows, one, zero)
        acc = Matrix.zeros(a.rows, a.rows, zero)
        for c in reversed(self.coeffs):
            cv: Any = c
            if isinstance(sample, (int, Fraction)) and c.im == 0:
                cv = c.re
            elif isinstance(sample, float):
                cv = float(c.re)
            acc = matmul(acc, a) + eye.scale(cv)
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:], self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def real_coeffs(self) -> List[Fraction]:
        """Coefficients as Fractions; raises if any is properly complex."""
        out = []
        for c in self.coeffs:
            if c.im != 0:
                raise ValueError("polynomial has complex coefficients")
            out.append(c.re)
        return out

    def height(self) -> Fraction:
        """Largest coefficient magnitude, measured as max(|re|, |im|)."""
        h = Fraction(0)
        for c in self.coeffs:
            h = max(h, abs(c.re), abs(c.im))
        return h

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        return poly_str(self)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_str(p: Poly) -> str:
    """Text form, highest power first: "z^3+2z^2-z+1"."""
    if p.is_zero():
        return "0"
    var = p.var
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if c.im != 0:
            if c.re != 0:
                cs = f"({c})"
                sign = "+"
            else:
                sign = "-" if c.im < 0 else "+"
                mag = abs(c.im)
                cs = (rat_str(mag) if mag != 1 else "") + "i"
        else:
            sign = "-" if c.re < 0 else "+"
            mag = abs(c.re)
            cs = rat_str(mag)
        if k == 0:
            body = cs
        else:
            xpow = var if k == 1 else f"{var}^{k}"
            body = xpow if cs in ("1", "") else (f"{cs}{xpow}" if cs != "i" and not cs.endswith("i") else f"{cs}*{xpow}")
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()])|(?P<bad>\S))"
)


def parse_poly(text: str, var: str = None) -> Poly:
    """Parse polynomial text like "z^3 + 2z^2 - z + 1" or "3*a^2-1/2".

    The variable is auto-detected when not given; mixed variable names are
    rejected.  The name "i" is the imaginary unit (so Gaussian coefficients
    like "(1+2i)z^2" parse) unless the variable is explicitly declared "i".
    """
    tokens: List[Tuple[str, Any]] = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r} in polynomial", m.start())
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial text")

    unit_i = var != "i"  # "i" names the imaginary unit unless it IS the variable
    seen_var = var
    for kind, val in tokens:
        if kind == "name" and not (unit_i and val == "i"):
            if seen_var is None:
                seen_var = val
            elif val != seen_var:
                raise VariableMismatch(f"mixed variables {seen_var!r} and {val!r}")
    if seen_var is None:
        seen_var = "z" if var is None else var

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    X = Poly((0, 1), seen_var)

    def parse_atom() -> Poly:
        nonlocal i
        kind, val = peek()
        if kind == "op" and val == "(":
            take()
            e = parse_sum()
            kind, val = peek()
            if kind != "op" or val != ")":
                raise ParseError("missing ')' in polynomial")
            take()
            return e
        if kind == "num":
            take()
            if "." in val:
                f = Fraction(val)
            else:
                f = rat(val)
            return Poly((f,), seen_var)
        if kind == "name":
            take()
            if unit_i and val == "i":
                return Poly((GaussianRational(0, 1),), seen_var)
            return X
        raise ParseError(f"unexpected token {val!r} in polynomial")

    def parse_power() -> Poly:
        base = parse_atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, val = peek()
            neg = False
            if kind == "op" and val == "-":
                take()
                neg = True
                kind, val = peek()
            if kind != "num" or "/" in val or "." in val:
                raise ParseError("exponent must be a nonnegative integer")
            take()
            if neg:
                raise ParseError("negative exponents are not polynomial")
            return base ** int(val)
        return base

    def parse_term() -> Poly:
        out = parse_power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                out = out * parse_power()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                # implicit multiplication, e.g. "2z^2" or "3(z+1)"
                out = out * parse_power()
            else:
                return out

    def parse_sum() -> Poly:
        kind, val = peek()
        neg = False
        if kind == "op" and val in "+-":
            take()
            neg = val == "-"
        out = parse_term()
        if neg:
            out = -out
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = parse_term()
                out = out - t if val == "-" else out + t
            else:
                return out

    result = parse_sum()
    if i != len(tokens):
        raise ParseError(f"trailing input in polynomial at token {tokens[i][1]!r}")
    return result


class RatFunc:
    """Quotient of two Polys, stored gcd-reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        var = num._join_var(den)
        num = num.with_var(var) if num.is_constant() else num
        den = den.with_var(var) if den.is_constant() else den
        if num.is_zero():
            den = num.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.leading()
            num = num / lead
            den = den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _coerce(x: Any, var: str) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x)
        if isinstance(x, (int, Fraction, GaussianRational)):
            return RatFunc(Poly((x,), var))
        return NotImplemented  # type: ignore[return-value]

    def zero(self) -> "RatFunc":
        return RatFunc(self.num.zero())

    def one(self) -> "RatFunc":
        return RatFunc(self.num.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZero("rational function division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other, self.num.var)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, x: Any) -> Any:
        d = self.den.eval(x)
        if isinstance(d, (int, Fraction)) and d == 0:
            raise DivisionByZero(f"denominator vanishes at {x}")
        if isinstance(d, GaussianRational) and not d:
            raise DivisionByZero(f"denominator vanishes at {x}")
        return self.num.eval(x) / d

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"
