"""Matrix wire format and error shaping for the CLI and the HTTP service.

A MatrixDocument is a plain JSON object:

    {"scalar": "rational" | "gaussian" | "double" | "poly",
     "rows": 2, "cols": 2,
     "entries": [["1", "1/2"], ["-3", "0"]],
     "name": "optional"}

Exact scalars travel as strings so nothing is rounded on the way
through; doubles travel as JSON numbers.  Complex eigenvalues are
emitted as [re, im] pairs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .errors import InvalidArgument, MechlinError, VariableMismatch
from .matrix import Matrix
from .polys import Poly, RatFunc, parse_poly, poly_str
from .scalars import GaussianRational, parse_gaussian

SCALAR_KINDS = ("rational", "gaussian", "double", "poly")


def detect_scalar(v: Any) -> str:
    if isinstance(v, bool):
        raise InvalidArgument("boolean matrix entries are not a thing here")
    if isinstance(v, (int, Fraction)):
        return "rational"
    if isinstance(v, GaussianRational):
        return "gaussian"
    if isinstance(v, (float, complex)):
        return "double"
    if isinstance(v, (Poly, RatFunc)):
        return "poly"
    raise InvalidArgument(f"no wire encoding for {type(v).__name__}")


def scalar_to_wire(v: Any, kind: str) -> Any:
    if kind == "rational":
        return str(Fraction(v))
    if kind == "gaussian":
        if not isinstance(v, GaussianRational):
            v = GaussianRational(v)
        return str(v)
    if kind == "double":
        return float(v)
    if kind == "poly":
        if isinstance(v, RatFunc):
            if v.den.degree == 0:
                return poly_str(v.num)
            return str(v)
        if not isinstance(v, Poly):
            v = Poly((v,), "a")
        return poly_str(v)
    raise InvalidArgument(f"unknown scalar kind {kind!r}")


def wire_to_scalar(x: Any, kind: str) -> Any:
    if kind == "rational":
        if isinstance(x, bool) or isinstance(x, float):
            raise InvalidArgument("rational entries travel as strings or integers")
        if isinstance(x, int):
            return Fraction(x)
        try:
            return Fraction(str(x))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidArgument(f"bad rational entry {x!r}: {e}") from None
    if kind == "gaussian":
        if isinstance(x, int):
            return GaussianRational(x)
        if not isinstance(x, str):
            raise InvalidArgument("gaussian entries travel as strings")
        return parse_gaussian(x)
    if kind == "double":
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise InvalidArgument("double entries travel as JSON numbers")
        return float(x)
    if kind == "poly":
        if isinstance(x, (int,)):
            return Poly((x,), "a")
        if not isinstance(x, str):
            raise InvalidArgument("poly entries travel as strings")
        return parse_poly(x, var=None)
    raise InvalidArgument(f"unknown scalar kind {kind!r}")


def matrix_to_doc(a: Matrix, scalar: str = None, name: str = None) -> Dict[str, Any]:
    if scalar is None:
        scalar = detect_scalar(a[0, 0]) if a.entries() else "rational"
    doc: Dict[str, Any] = {
        "scalar": scalar,
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[scalar_to_wire(a[i, j], scalar) for j in range(a.cols)] for i in range(a.rows)],
    }
    if name:
        doc["name"] = name
    return doc


def doc_to_matrix(doc: Any) -> Tuple[Matrix, str]:
    if not isinstance(doc, dict):
        raise InvalidArgument("matrix document must be a JSON object")
    missing = [k for k in ("scalar", "rows", "cols", "entries") if k not in doc]
    if missing:
        raise InvalidArgument(f"matrix document is missing {', '.join(missing)}")
    kind = doc["scalar"]
    if kind not in SCALAR_KINDS:
        raise InvalidArgument(f"unknown scalar kind {kind!r} (want one of {SCALAR_KINDS})")
    rows, cols = doc["rows"], doc["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise InvalidArgument("rows and cols must be positive integers")
    grid = doc["entries"]
    if not isinstance(grid, list) or len(grid) != rows:
        raise InvalidArgument(f"expected {rows} entry rows")
    vals: List[Any] = []
    for r in grid:
        if not isinstance(r, list) or len(r) != cols:
            raise InvalidArgument(f"every entry row must have {cols} values")
        vals.extend(wire_to_scalar(x, kind) for x in r)
    if kind == "poly":
        vals = _unify_poly_vars(vals)
    return Matrix(rows, cols, vals), kind


def _unify_poly_vars(vals: List[Poly]) -> List[Poly]:
    names = {p.var for p in vals if not p.is_constant()}
    if len(names) > 1:
        raise VariableMismatch(f"entries mix parameters {sorted(names)}")
    var = names.pop() if names else "a"
    return [p.with_var(var) for p in vals]


def vector_to_wire(v: Matrix, kind: str) -> List[Any]:
    if v.cols != 1:
        raise InvalidArgument(f"expected a column vector, got {v.shape}")
    return [scalar_to_wire(v[i, 0], kind) for i in range(v.rows)]


def wire_to_vector(xs: Any, kind: str) -> Matrix:
    if not isinstance(xs, list) or not xs:
        raise InvalidArgument("vector must be a nonempty JSON array")
    return Matrix(len(xs), 1, [wire_to_scalar(x, kind) for x in xs])


def complex_pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def api_error(exc: MechlinError) -> Dict[str, Any]:
    extra = {
        k: v
        for k, v in vars(exc).items()
        if k not in ("detail", "args") and not k.startswith("_")
    }
    return {"code": exc.code, "message": exc.detail or exc.code, "detail": extra}
