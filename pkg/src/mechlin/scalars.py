"""Scalar kernel: exact rationals, Gaussian rationals, and coercion glue.

Rationals are ``fractions.Fraction`` directly; there is no wrapper class.
The helpers here parse and render the text forms used by the equation
grammar and the wire format, and define the ring-protocol conveniences
(``zero_like``, ``one_like``) that the generic matrix code leans on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Union

from .errors import DivisionByZero, ParseError

Rat = Fraction


def rat(p: Union[int, str, Fraction], q: int = 1) -> Fraction:
    """Build a Fraction, accepting "3/4", "0.25", ints, or another Fraction."""
    if isinstance(p, Fraction) and q == 1:
        return p
    if isinstance(p, str):
        try:
            return Fraction(p)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational literal {p!r}: {e}")
    if q == 0:
        raise DivisionByZero(f"rational {p}/0")
    return Fraction(p, q)


def rat_str(x: Fraction) -> str:
    """Canonical text form: "p" when integral, else "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Supports field arithmetic; division by zero raises DivisionByZero.
    Instances are immutable and hashable.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name: str, value: Any):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x: Any) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise DivisionByZero("gaussian rational division by zero")
        c = self * o.conjugate()
        return GaussianRational(c.re / n, c.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return rat_str(self.re)
        im_mag = rat_str(abs(self.im))
        im_part = f"{im_mag}i" if im_mag != "1" else "i"
        if self.re == 0:
            return im_part if self.im > 0 else f"-{im_part}"
        sign = "+" if self.im > 0 else "-"
        return f"{rat_str(self.re)}{sign}{im_part}"


GR = GaussianRational

Scalar = Union[Fraction, GaussianRational, float, complex]


def zero_like(x: Any) -> Any:
    """Additive identity in the same ring as x."""
    if isinstance(x, GaussianRational):
        return GaussianRational(0)
    if isinstance(x, Fraction):
        return Fraction(0)
    if isinstance(x, complex):
        return 0j
    if isinstance(x, float):
        return 0.0
    if isinstance(x, int):
        return 0
    z = getattr(x, "zero", None)
    if z is not None:
        return z() if callable(z) else z
    return type(x).ring_zero()  # duck-typed rings supply this


def one_like(x: Any) -> Any:
    """Multiplicative identity in the same ring as x."""
    if isinstance(x, GaussianRational):
        return GaussianRational(1)
    if isinstance(x, Fraction):
        return Fraction(1)
    if isinstance(x, complex):
        return 1 + 0j
    if isinstance(x, float):
        return 1.0
    if isinstance(x, int):
        return 1
    o = getattr(x, "one", None)
    if o is not None:
        return o() if callable(o) else o
    return type(x).ring_one()


def is_zero(x: Any) -> bool:
    if isinstance(x, float):
        return x == 0.0
    if isinstance(x, complex):
        return x == 0
    return not bool(x) if hasattr(x, "__bool__") else x == 0


def to_float(x: Any) -> float:
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError("complex value has no float form")
        return float(x.re)
    return float(x)


def to_complex(x: Any) -> complex:
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(x)


def gaussian_str(x: GaussianRational) -> str:
    return str(x)


def rational_sqrt(x: Fraction) -> Union[Fraction, None]:
    """Exact square root when x is a perfect rational square, else None."""
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    import math

    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(z: GaussianRational) -> Union[GaussianRational, None]:
    """Exact square root in the Gaussian rationals, or None if it leaves the field.

    Solves (x + yi)^2 = a + bi: needs |z| rational and (a + |z|)/2 a
    rational square.
    """
    a, b = z.re, z.im
    if b == 0:
        if a >= 0:
            r = rational_sqrt(a)
            return None if r is None else GaussianRational(r)
        r = rational_sqrt(-a)
        return None if r is None else GaussianRational(0, r)
    mod = rational_sqrt(a * a + b * b)
    if mod is None:
        return None
    x2 = (a + mod) / 2
    x = rational_sqrt(x2)
    if x is None or x == 0:
        return None
    y = b / (2 * x)
    return GaussianRational(x, y)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a/b", "c/di", "a/b+c/di", "a/b-c/di", "i", "-i".

    The imaginary unit is a trailing "i" on the second (or only) term.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty gaussian rational")

    def term(t: str) -> tuple:
        # returns (Fraction, is_imag)
        if t in ("i", "+i"):
            return Fraction(1), True
        if t == "-i":
            return Fraction(-1), True
        if t.endswith("i"):
            return rat(t[:-1]), True
        return rat(t), False

    # split at the last +/- not at position 0 and not inside an exponent
    split = -1
    for k in range(len(s) - 1, 0, -1):
        if s[k] in "+-" and s[k - 1] not in "+-/eE":
            split = k
            break
    parts = [s] if split < 0 else [s[:split], s[split:]]
    re_part = Fraction(0)
    im_part = Fraction(0)
    for p in parts:
        v, imag = term(p)
        if imag:
            im_part += v
        else:
            re_part += v
    return GaussianRational(re_part, im_part)
