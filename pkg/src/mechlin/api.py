"""Request-body-in, response-dict-out handlers.

Both the CLI and the HTTP service call these, so every mathematical
convention is defined exactly once.  Handlers take a plain dict (already
decoded from JSON), raise MechlinError subclasses on domain problems,
and return JSON-ready dicts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict, Sequence

from . import companion as comp
from . import determinant as dets
from . import numeric
from .eqparse import parse_system, render_system
from .errors import InvalidArgument, NoValidOption
from .factor import (
    cholesky,
    ldlt,
    plu,
    project_colspace,
    qr,
    schur_complement,
    solve,
    turing,
)
from .generators import KINDS, cayley, exam_unimodular_question, generate
from .matrix import Matrix, matmul
from .parametric import ParamMatrix, parametric_det, parametric_rref
from .polys import parse_poly, poly_str
from .wire import (
    complex_pair,
    detect_scalar,
    doc_to_matrix,
    matrix_to_doc,
    scalar_to_wire,
    vector_to_wire,
    wire_to_vector,
)


def _to_double(a: Matrix) -> Matrix:
    """Exact entries to floats; complex entries are rejected upstream."""
    return numeric.from_ndarray(numeric.to_ndarray(a, float))


def _need(body: Dict[str, Any], key: str) -> Any:
    if not isinstance(body, dict) or key not in body:
        raise InvalidArgument(f"request is missing {key!r}")
    return body[key]


def _matrix_arg(body: Dict[str, Any], key: str = "matrix"):
    return doc_to_matrix(_need(body, key))


def _field_matrix(body: Dict[str, Any], key: str = "matrix"):
    # Poly is a ring: elimination cannot divide by a pivot entry
    a, scalar = _matrix_arg(body, key)
    if scalar == "poly":
        raise InvalidArgument(
            "polynomial entries only support det and param rref; "
            "this operation needs rational, gaussian, or double scalars"
        )
    return a, scalar


def _opt(body: Dict[str, Any], key: str, default: Any) -> Any:
    v = body.get(key, default) if isinstance(body, dict) else default
    return default if v is None else v


# -- equations ---------------------------------------------------------------


def handle_parse(body: Dict[str, Any]) -> Dict[str, Any]:
    text = _need(body, "text")
    if not isinstance(text, str):
        raise InvalidArgument("text must be a string")
    complex_mode = bool(_opt(body, "complex", False))
    order = _opt(body, "order", "first")
    system = parse_system(text, complex_mode=complex_mode, order=order)
    kind = "gaussian" if complex_mode else "rational"
    return {
        "vars": list(system.vars),
        "A": matrix_to_doc(system.A, kind),
        "b": vector_to_wire(system.b, kind),
        "rendered": render_system(system),
    }


# -- factorizations ----------------------------------------------------------


def _split_arg(body: Dict[str, Any], a: Matrix) -> Sequence[int]:
    raw = _opt(body, "split", None)
    if raw is None:
        raise InvalidArgument("schur factoring needs split: [r, c]")
    if isinstance(raw, str):
        bits = raw.split(",")
        if len(bits) != 2 or not all(b.strip().lstrip("-").isdigit() for b in bits):
            raise InvalidArgument(f"bad split {raw!r}; want r,c")
        raw = [int(b) for b in bits]
    if not (isinstance(raw, list) and len(raw) == 2 and all(isinstance(x, int) for x in raw)):
        raise InvalidArgument("split must be two integers")
    r, c = raw
    if not (0 < r < a.rows and 0 < c < a.cols):
        raise InvalidArgument(f"split ({r}, {c}) does not cut {a.shape}")
    return r, c


def handle_factor(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _field_matrix(body)
    kind = _opt(body, "kind", "plu")
    if kind == "plu":
        f = plu(a, pivoting=_opt(body, "pivoting", "partial"))
        out = {
            "kind": "plu",
            "p": list(f.p),
            "L": matrix_to_doc(f.L),
            "U": matrix_to_doc(f.U),
        }
        if f.q is not None:
            out["q"] = list(f.q)
        return out
    if kind == "turing":
        f = turing(a)
        return {
            "kind": "turing",
            "p": list(f.p),
            "L": matrix_to_doc(f.L),
            "D": matrix_to_doc(f.D),
            "U": matrix_to_doc(f.U),
            "R": matrix_to_doc(f.R),
            "rank": f.rank,
            "pivot_cols": list(f.pivot_cols),
        }
    if kind == "qr":
        default_mode = "householder-double" if scalar == "double" else "mgs-exact"
        f = qr(a, mode=_opt(body, "mode", default_mode))
        return {"kind": "qr", "mode": f.mode, "Q": matrix_to_doc(f.Q), "R": matrix_to_doc(f.R)}
    if kind == "ldlt":
        f = ldlt(a)
        return {"kind": "ldlt", "L": matrix_to_doc(f.L), "D": matrix_to_doc(f.Dg)}
    if kind == "cholesky":
        return {"kind": "cholesky", "L": matrix_to_doc(cholesky(a), "double")}
    if kind == "schur":
        r, c = _split_arg(body, a)
        return {
            "kind": "schur",
            "split": [r, c],
            "complement": matrix_to_doc(schur_complement(a, r, c)),
        }
    raise InvalidArgument(f"unknown factor kind {kind!r}")


# -- determinants, solving, inverses -----------------------------------------


def handle_det(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _matrix_arg(body)
    method = _opt(body, "method", "schur")
    if scalar == "poly":
        value = parametric_det(_param_matrix(a))
        return {"det": poly_str(value), "method": "laplace"}
    value = dets.det(a, method=method)
    return {"det": scalar_to_wire(value, detect_scalar(value)), "method": method}


def handle_solve(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _field_matrix(body)
    b = wire_to_vector(_need(body, "rhs"), scalar)
    result = solve(a, b, method=_opt(body, "method", "turing"))
    out: Dict[str, Any] = {"kind": result.kind}
    if result.x is not None:
        out["x"] = vector_to_wire(result.x, _detect_vec(result.x))
    if result.nullspace:
        out["nullspace"] = [vector_to_wire(v, _detect_vec(v)) for v in result.nullspace]
    if result.witness_row is not None:
        out["witness_row"] = result.witness_row
        out["witness"] = [str(w) for w in result.witness]
    return out


def _detect_vec(v: Matrix) -> str:
    return detect_scalar(v[0, 0])


def handle_inverse(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _field_matrix(body)
    if scalar == "double":
        from .factor import inverse as inv_f

        return {"inverse": matrix_to_doc(inv_f(a), "double")}
    return {"inverse": matrix_to_doc(dets.inverse_exact(a))}


# -- eigenvalues and singular values ------------------------------------------


def handle_eig(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _field_matrix(body)
    numeric_mode = bool(_opt(body, "numeric", scalar == "double"))
    if numeric_mode:
        if scalar != "double":
            a = _to_double(a)
        want_vectors = bool(_opt(body, "vectors", False))
        r = numeric.eig_qr(a, want_vectors=want_vectors)
        out: Dict[str, Any] = {
            "method": "qr",
            "values": [complex_pair(z) for z in r.eigenvalues],
            "iterations": r.iterations,
        }
        if r.eigenvectors is not None:
            vecs = r.eigenvectors
            out["vectors"] = [
                [complex_pair(complex(vecs[i, j])) for i in range(vecs.rows)]
                for j in range(vecs.cols)
            ]
        return out
    r = comp.eig_exact_small(a)
    out = {
        "method": "exact",
        "values": [str(v) for v in r.values],
        "note": r.note,
    }
    if r.remaining is not None and r.remaining.degree > 0:
        out["remaining"] = poly_str(r.remaining)
    return out


def handle_svd(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _matrix_arg(body)
    if scalar != "double":
        a = _to_double(a)
    r = numeric.svd_jacobi(a)
    return {
        "sigma": [float(s) for s in r.sigma],
        "U": matrix_to_doc(r.U, "double"),
        "V": matrix_to_doc(r.V, "double"),
        "sweeps": r.sweeps,
    }


# -- companion forms -----------------------------------------------------------


def _companion_payload(res: comp.CompanionResult) -> Dict[str, Any]:
    out = {
        "A": matrix_to_doc(res.A),
        "basis": res.basis,
        "height": str(res.height),
    }
    if res.B is not None:
        out["B"] = matrix_to_doc(res.B)
    return out


def handle_companion(body: Dict[str, Any]) -> Dict[str, Any]:
    hmax = _opt(body, "search_height", None)
    if hmax is not None:
        p = parse_poly(str(_need(body, "poly")), var=None)
        m, h = comp.min_height_companion_search(p, hmax=int(hmax))
        return {"A": matrix_to_doc(m), "basis": "monomial", "height": str(h), "searched": True}
    kind = _opt(body, "kind", "frobenius")
    if kind == "colleague":
        coeffs = _need(body, "coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise InvalidArgument("colleague needs coeffs: Chebyshev coefficients, constant first")
        res = comp.colleague_chebyshev([Fraction(str(c)) for c in coeffs])
        return _companion_payload(res)
    p = parse_poly(str(_need(body, "poly")), var=None)
    if kind == "frobenius":
        return _companion_payload(comp.frobenius_companion(p))
    if kind == "pencil":
        return _companion_payload(comp.companion_pencil(p))
    if kind == "mandelbrot":
        n = _need(body, "n")
        res = comp.mandelbrot_companion(int(n))
        out = _companion_payload(res)
        out["poly"] = poly_str(comp.mandelbrot_poly(int(n)))
        return out
    raise InvalidArgument(f"unknown companion kind {kind!r}")


def handle_mandelbrot(body: Dict[str, Any]) -> Dict[str, Any]:
    n = int(_need(body, "n"))
    res = comp.mandelbrot_companion(n)
    out = _companion_payload(res)
    out["poly"] = poly_str(comp.mandelbrot_poly(n))
    return out


# -- parametric ----------------------------------------------------------------


def _param_matrix(a: Matrix) -> ParamMatrix:
    rows = [list(a.row_values(i)) for i in range(a.rows)]
    return ParamMatrix.from_rows(rows)


def handle_param_rref(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _matrix_arg(body)
    if scalar != "poly":
        raise InvalidArgument("parametric elimination wants a poly matrix document")
    tree = parametric_rref(_param_matrix(a))
    leaves = []
    for lf in tree.leaves:
        entry: Dict[str, Any] = {
            "condition": str(lf.condition),
            "constraints": [
                {"q": poly_str(q), "kind": kind} for q, kind in lf.condition.constraints
            ],
            "rref": matrix_to_doc(lf.rref, "poly"),
            "rank": lf.rank,
        }
        if lf.det is not None:
            entry["det"] = scalar_to_wire(lf.det, "poly")
        if lf.note:
            entry["note"] = lf.note
        leaves.append(entry)
    return {"param": tree.param, "leaves": leaves}


def handle_param_det(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _matrix_arg(body)
    if scalar != "poly":
        raise InvalidArgument("parametric determinant wants a poly matrix document")
    return {"det": poly_str(parametric_det(_param_matrix(a)))}


# -- generators ----------------------------------------------------------------


def handle_gen(body: Dict[str, Any]) -> Dict[str, Any]:
    kind = _need(body, "kind")
    if kind == "cayley":
        s, _ = _matrix_arg(body)
        return {"kind": "cayley", "matrix": matrix_to_doc(cayley(s))}
    if kind == "gallery3":
        from .generators import gallery3

        return {"kind": "gallery3", "matrix": matrix_to_doc(gallery3())}
    if kind not in KINDS:
        raise InvalidArgument(f"unknown generator kind {kind!r} (want one of {sorted(KINDS)})")
    size = int(_opt(body, "size", 4))
    seed = int(_opt(body, "seed", 0))
    kwargs: Dict[str, Any] = {}
    for key in ("first_row", "first_col", "last_col"):
        if body.get(key) is not None:
            kwargs[key] = [Fraction(str(x)) for x in body[key]]
    for key in ("lower", "upper", "lo", "hi", "ops"):
        if body.get(key) is not None:
            kwargs[key] = int(body[key])
    m = generate(kind, size, seed, **kwargs)
    return {"kind": kind, "seed": seed, "matrix": matrix_to_doc(m)}


# -- tiny vector utilities (the UI's back door) ---------------------------------


def handle_apply(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _matrix_arg(body)
    x = wire_to_vector(_need(body, "vector"), scalar)
    if a.cols != x.rows:
        raise InvalidArgument(f"cannot apply {a.shape} to a length-{x.rows} vector")
    y = matmul(a, x)
    return {"vector": vector_to_wire(y, _detect_vec(y))}


def handle_project(body: Dict[str, Any]) -> Dict[str, Any]:
    a, scalar = _field_matrix(body, "A")
    b = wire_to_vector(_need(body, "b"), scalar)
    if a.rows != b.rows:
        raise InvalidArgument(f"A is {a.shape} but b has length {b.rows}")
    p = project_colspace(a, b)
    resid = math.sqrt(sum(float(b[i, 0] - p[i, 0]) ** 2 for i in range(b.rows)))
    return {"p": vector_to_wire(p, _detect_vec(p)), "residual": resid}


# -- exam tools -----------------------------------------------------------------


def mc_floor_answer(true_value: float, options: Sequence[float]) -> float:
    """The best multiple-choice option that does not overshoot the truth."""
    if not options:
        raise InvalidArgument("no options supplied")
    eligible = [float(o) for o in options if float(o) <= true_value]
    if not eligible:
        raise NoValidOption(f"every option exceeds {true_value}")
    return max(eligible)


def handle_exam_mc(body: Dict[str, Any]) -> Dict[str, Any]:
    true_value = _need(body, "true_value")
    options = _need(body, "options")
    if not isinstance(options, list):
        raise InvalidArgument("options must be a JSON array of numbers")
    return {"answer": mc_floor_answer(float(true_value), [float(o) for o in options])}


def handle_exam_unimodular(body: Dict[str, Any]) -> Dict[str, Any]:
    seed = int(_opt(body, "seed", 0))
    m, inv = exam_unimodular_question(seed)
    return {
        "seed": seed,
        "matrix": matrix_to_doc(m),
        "inverse": matrix_to_doc(inv),
        "det": str(dets.det(m)),
    }
