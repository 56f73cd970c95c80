"""Turn textual systems of linear equations into (A, b, vars) and back.

Grammar, per equation (separated by ';' or newlines):

    side "=" side
    side  := [sign] term (("+"|"-") term)*
    term  := coefficient ["*"] [variable] | variable ["/" integer]
    coefficient := integer ["/" integer]   (exact rationals only)

Variables may appear on either side; right-hand occurrences move left
with their sign flipped, constants accumulate on the right.  Decimal
literals are rejected.  In complex mode the identifier "i" is the
imaginary unit rather than a variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .errors import NonlinearError, ParseError
from .matrix import Matrix
from .scalars import GaussianRational, rat_str


@dataclass(frozen=True)
class LinearSystem:
    A: Matrix
    b: Matrix
    vars: Tuple[str, ...]

    def __post_init__(self):
        assert self.A.cols == len(self.vars)
        assert self.A.rows == self.b.rows and self.b.cols == 1


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def where(self):
        return f"line {self.line}, column {self.col}"


def _tokenize_eq(text: str, line_no: int) -> List[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise ParseError(
                    f"line {line_no}, column {col}: decimal literals are not accepted; "
                    "use an exact fraction like 1/2",
                    i,
                )
            toks.append(_Tok("int", text[i:j], line_no, col))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], line_no, col))
            i = j
            continue
        if ch in "+-*/=":
            toks.append(_Tok(ch, ch, line_no, col))
            i += 1
            continue
        raise ParseError(f"line {line_no}, column {col}: unexpected character {ch!r}", i)
    return toks


class _TermParser:
    """Parses one side of one equation into (coefficient, variable) pairs."""

    def __init__(self, toks: List[_Tok], line_no: int, complex_mode: bool):
        self.toks = toks
        self.i = 0
        self.line = line_no
        self.complex = complex_mode

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok: Optional[_Tok] = None):
        where = tok.where() if tok else f"line {self.line}, end of equation"
        raise ParseError(f"{where}: {msg}")

    def _primary(self) -> Tuple[Any, Optional[str]]:
        """Returns (numeric value, None) or (1, varname)."""
        t = self.peek()
        if t is None:
            self.fail("expected a term")
        if t.kind == "int":
            self.take()
            return Fraction(int(t.text)), None
        if t.kind == "ident":
            self.take()
            if self.complex and t.text == "i":
                return GaussianRational(0, 1), None
            return Fraction(1), t.text
        self.fail(f"unexpected {t.text!r}", t)

    def term(self) -> Tuple[Any, Optional[str]]:
        coeff: Any = Fraction(1)
        var: Optional[str] = None
        t = self.peek()
        if t is not None and t.kind in "+-":
            self.take()
            if t.kind == "-":
                coeff = -coeff
        while True:
            value, name = self._primary()
            if name is not None:
                if var is not None:
                    raise NonlinearError(
                        f"line {self.line}: product of variables "
                        f"{var!r} and {name!r} is not linear"
                    )
                var = name
            else:
                coeff = coeff * value
            t = self.peek()
            if t is not None and t.kind == "*":
                self.take()
                explicit_star = True
                continue
            if t is not None and t.kind == "/":
                self.take()
                nxt = self.peek()
                if nxt is None:
                    self.fail("expected a denominator after '/'")
                if nxt.kind == "ident" and not (self.complex and nxt.text == "i"):
                    raise NonlinearError(
                        f"line {self.line}: variable {nxt.text!r} in a denominator "
                        "is not linear"
                    )
                dval, _ = self._primary()
                if dval == 0:
                    self.fail("division by zero in coefficient", nxt)
                coeff = coeff / dval
                t = self.peek()
                if t is not None and t.kind == "*":
                    self.take()
                    continue
            # juxtaposition: "3x", "2i", "1/2 x"
            t = self.peek()
            if t is not None and t.kind in ("int", "ident"):
                continue
            break
        return coeff, var

    def side(self) -> List[Tuple[Any, Optional[str]]]:
        out = []
        if self.peek() is None:
            self.fail("empty side of equation")
        out.append(self.term())
        while True:
            t = self.peek()
            if t is None:
                return out
            if t.kind not in "+-":
                self.fail(f"expected '+' or '-', found {t.text!r}", t)
            self.take()
            sgn = Fraction(-1) if t.kind == "-" else Fraction(1)
            c, v = self.term()
            out.append((sgn * c, v))


def parse_system(text: str, complex_mode: bool = False, order: str = "first") -> LinearSystem:
    """Parse equation text into a LinearSystem.

    order: "first" (variables in first-appearance order) or "alpha".
    """
    if not text or not text.strip():
        raise ParseError("empty system text")
    text = text.replace("−", "-").replace("×", "*")
    # split on ';' and newlines, keeping line numbers for messages
    segments: List[Tuple[str, int]] = []
    for ln, line in enumerate(text.split("\n"), start=1):
        for piece in line.split(";"):
            if piece.strip():
                segments.append((piece, ln))
    if not segments:
        raise ParseError("no equations found")

    parsed: List[Tuple[List, List, int]] = []
    seen_vars: List[str] = []
    for seg, ln in segments:
        toks = _tokenize_eq(seg, ln)
        eq_positions = [k for k, t in enumerate(toks) if t.kind == "="]
        if not eq_positions:
            raise ParseError(f"line {ln}: equation has no '='")
        if len(eq_positions) > 1:
            t = toks[eq_positions[1]]
            raise ParseError(f"{t.where()}: more than one '=' in an equation")
        k = eq_positions[0]
        lhs_p = _TermParser(toks[:k], ln, complex_mode)
        rhs_p = _TermParser(toks[k + 1 :], ln, complex_mode)
        lhs = lhs_p.side()
        rhs = rhs_p.side()
        for _, v in lhs + rhs:
            if v is not None and v not in seen_vars:
                seen_vars.append(v)
        parsed.append((lhs, rhs, ln))

    if not seen_vars:
        raise ParseError("system contains no variables")
    if order == "alpha":
        vars_list = sorted(seen_vars)
    elif order == "first":
        vars_list = seen_vars
    else:
        raise ParseError(f"unknown variable order {order!r}")

    make = GaussianRational if complex_mode else Fraction
    zero = make(0)
    a_rows: List[List[Any]] = []
    b_vals: List[Any] = []
    for lhs, rhs, _ln in parsed:
        row: Dict[str, Any] = {v: zero for v in vars_list}
        const = zero
        for c, v in lhs:
            c = make(c) if not isinstance(c, GaussianRational) else c
            if not complex_mode and isinstance(c, GaussianRational):
                c = c.re
            if v is None:
                const = const - c
            else:
                row[v] = row[v] + c
        for c, v in rhs:
            c = make(c) if not isinstance(c, GaussianRational) else c
            if not complex_mode and isinstance(c, GaussianRational):
                c = c.re
            if v is None:
                const = const + c
            else:
                row[v] = row[v] - c
        a_rows.append([row[v] for v in vars_list])
        b_vals.append(const)

    A = Matrix.from_rows(a_rows)
    b = Matrix.column(b_vals)
    return LinearSystem(A, b, tuple(vars_list))


def _coeff_terms(c: Any, var: Optional[str]) -> List[Tuple[Fraction, str]]:
    """Split a coefficient into renderable (rational, suffix) pieces."""
    pieces: List[Tuple[Fraction, str]] = []
    vtxt = var or ""
    if isinstance(c, GaussianRational):
        if c.re != 0 or (c.im == 0 and var is None):
            pieces.append((c.re, vtxt))
        if c.im != 0:
            pieces.append((c.im, ("i*" + vtxt) if vtxt else "i"))
        if not pieces and var is not None:
            pieces.append((Fraction(0), vtxt))
    else:
        pieces.append((Fraction(c), vtxt))
    return pieces


def _render_piece(mag: Fraction, suffix: str) -> str:
    if not suffix:
        return rat_str(mag)
    if suffix.startswith("i*") and suffix != "i*":
        head = "" if mag == 1 else f"{rat_str(mag)}"
        base = f"{head}{suffix}" if head else suffix
        return base
    if suffix == "i":
        return "i" if mag == 1 else f"{rat_str(mag)}i"
    if mag == 1:
        return suffix
    return f"{rat_str(mag)}*{suffix}"


def render_system(s: LinearSystem) -> str:
    """Canonical text form; parse_system recovers (A, b, vars) exactly.

    The first equation writes every variable, zero coefficients included,
    so the variable order survives the round trip.
    """
    lines = []
    for i in range(s.A.rows):
        terms: List[Tuple[Fraction, str]] = []
        for j, v in enumerate(s.vars):
            c = s.A[i, j]
            if i == 0:
                if isinstance(c, GaussianRational) and (c.re != 0 or c.im != 0):
                    terms.extend(_coeff_terms(c, v))
                elif isinstance(c, GaussianRational):
                    terms.append((Fraction(0), v))
                else:
                    terms.append((Fraction(c), v))
            else:
                if isinstance(c, GaussianRational):
                    if c.re != 0 or c.im != 0:
                        terms.extend(_coeff_terms(c, v))
                elif c != 0:
                    terms.append((Fraction(c), v))
        if not terms:
            terms.append((Fraction(0), ""))
        lhs_parts: List[str] = []
        for mag, suffix in terms:
            piece = _render_piece(abs(mag), suffix)
            if not lhs_parts:
                lhs_parts.append(piece if mag >= 0 else f"-{piece}")
            else:
                lhs_parts.append(f" + {piece}" if mag >= 0 else f" - {piece}")
        bi = s.b[i, 0]
        rhs_terms = _coeff_terms(bi, None) if isinstance(bi, GaussianRational) else [(Fraction(bi), "")]
        if not rhs_terms:
            rhs_terms = [(Fraction(0), "")]
        rhs_parts: List[str] = []
        for mag, suffix in rhs_terms:
            piece = _render_piece(abs(mag), suffix)
            if not rhs_parts:
                rhs_parts.append(piece if mag >= 0 else f"-{piece}")
            else:
                rhs_parts.append(f" + {piece}" if mag >= 0 else f" - {piece}")
        lines.append("".join(lhs_parts) + " = " + "".join(rhs_parts))
    return "; ".join(lines)
