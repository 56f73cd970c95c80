"""Command-line front end.

Matrix input comes from --file (a MatrixDocument .json) or stdin.
Output is JSON by default; --format csv flattens matrix payloads to
comma rows, --format pretty prints aligned matrices and, for param,
an indented condition/payload listing.

Exit status: 0 success, 1 domain error (ApiError JSON on stdout),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, Optional

from . import api
from .errors import InvalidArgument, MechlinError
from .wire import api_error, doc_to_matrix

# -- input plumbing ------------------------------------------------------------


def _read_doc(args) -> Dict[str, Any]:
    if getattr(args, "file", None):
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as e:
            raise InvalidArgument(f"cannot read {args.file}: {e}") from None
    else:
        raw = sys.stdin.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InvalidArgument(f"matrix document is not valid JSON: {e}") from None
    return doc


def _csv_list(text: Optional[str]):
    if text is None:
        return None
    return [bit.strip() for bit in text.split(",") if bit.strip()]


# -- output plumbing -----------------------------------------------------------


def _emit(out: Dict[str, Any], fmt: str):
    if fmt == "json":
        print(json.dumps(out, indent=2))
    elif fmt == "csv":
        print(_to_csv(out))
    elif fmt == "pretty":
        print(_to_pretty(out))
    else:
        raise InvalidArgument(f"unknown format {fmt!r}")


def _is_doc(v: Any) -> bool:
    return isinstance(v, dict) and "entries" in v and "scalar" in v


def _to_csv(out: Dict[str, Any]) -> str:
    lines = []
    for k, v in out.items():
        if _is_doc(v):
            lines.append(k)
            for row in v["entries"]:
                lines.append(",".join(str(x) for x in row))
        elif isinstance(v, list) and v and not isinstance(v[0], (dict, list)):
            lines.append(k + "," + ",".join(str(x) for x in v))
        elif not isinstance(v, (dict, list)):
            lines.append(f"{k},{v}")
    return "\n".join(lines)


def _doc_pretty(doc: Dict[str, Any]) -> str:
    m, _ = doc_to_matrix(doc)
    return str(m)


def _to_pretty(out: Dict[str, Any]) -> str:
    if "rendered" in out:  # parse output reads best as the system itself
        return out["rendered"]
    if "leaves" in out:  # param case tree: indented condition/payload listing
        lines = []
        for leaf in out["leaves"]:
            lines.append(f"case {leaf['condition']}:")
            bits = [f"rank {leaf['rank']}"]
            if "det" in leaf:
                bits.append(f"det {leaf['det']}")
            if leaf.get("note"):
                bits.append(leaf["note"])
            lines.append("  " + ", ".join(bits))
            for row in _doc_pretty(leaf["rref"]).splitlines():
                lines.append("  " + row)
        return "\n".join(lines)
    lines = []
    for k, v in out.items():
        if _is_doc(v):
            lines.append(f"{k}:")
            lines.extend(_doc_pretty(v).splitlines())
        elif isinstance(v, list):
            lines.append(f"{k}: {v}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


# -- subcommand runners ----------------------------------------------------------


def _run_parse(args):
    text = args.text if args.text is not None else sys.stdin.read()
    return api.handle_parse({"text": text, "complex": args.complex, "order": args.order})


def _run_factor(args):
    body: Dict[str, Any] = {"matrix": _read_doc(args), "kind": args.kind}
    if args.pivoting:
        body["pivoting"] = args.pivoting
    if args.mode:
        body["mode"] = args.mode
    if args.split:
        body["split"] = args.split
    return api.handle_factor(body)


def _run_det(args):
    return api.handle_det({"matrix": _read_doc(args), "method": args.method})


def _run_solve(args):
    rhs = _csv_list(args.rhs)
    if rhs is None:
        raise InvalidArgument("solve needs --rhs with comma-separated entries")
    return api.handle_solve({"matrix": _read_doc(args), "rhs": rhs, "method": args.method})


def _run_inverse(args):
    return api.handle_inverse({"matrix": _read_doc(args)})


def _run_eig(args):
    body: Dict[str, Any] = {"matrix": _read_doc(args), "vectors": args.vectors}
    if args.numeric:
        body["numeric"] = True
    return api.handle_eig(body)


def _run_svd(args):
    return api.handle_svd({"matrix": _read_doc(args)})


def _run_companion(args):
    body: Dict[str, Any] = {"kind": args.kind}
    if args.poly:
        body["poly"] = args.poly
    if args.coeffs:
        body["coeffs"] = _csv_list(args.coeffs)
    if args.search_height is not None:
        body["search_height"] = args.search_height
    return api.handle_companion(body)


def _run_mandelbrot(args):
    return api.handle_mandelbrot({"n": args.n})


def _run_param(args):
    body = {"matrix": _read_doc(args)}
    if args.op == "det":
        return api.handle_param_det(body)
    return api.handle_param_rref(body)


def _run_gen(args):
    body: Dict[str, Any] = {"kind": args.kind, "size": args.size, "seed": args.seed}
    if args.kind == "cayley":
        body["matrix"] = _read_doc(args)
    for key in ("first_row", "first_col", "last_col"):
        v = _csv_list(getattr(args, key))
        if v is not None:
            body[key] = v
    for key in ("lower", "upper", "lo", "hi", "ops"):
        v = getattr(args, key)
        if v is not None:
            body[key] = v
    return api.handle_gen(body)


def _run_exam(args):
    if args.kind == "mc":
        if args.true is None or args.options is None:
            raise InvalidArgument("exam --kind mc needs --true and --options")
        opts = [float(x) for x in _csv_list(args.options)]
        return api.handle_exam_mc({"true_value": args.true, "options": opts})
    return api.handle_exam_unimodular({"seed": args.seed})


def _run_serve(args):
    from .service import serve

    serve(port=args.port, host=args.host)
    return None


# -- parser --------------------------------------------------------------------


def _add_matrix_io(sp):
    sp.add_argument("--file", help="MatrixDocument .json (default: read stdin)")


def _add_format(sp):
    sp.add_argument("--format", choices=("json", "csv", "pretty"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mechlin", description="exact-first linear algebra")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse linear equation text")
    p.add_argument("text", nargs="?", help="equation text (default: read stdin)")
    p.add_argument("--complex", action="store_true", help="allow i in coefficients")
    p.add_argument("--order", choices=("first", "alpha"), default="first")
    _add_format(p)
    p.set_defaults(run=_run_parse)

    p = sub.add_parser("factor", help="matrix factorizations")
    p.add_argument("--kind", choices=("plu", "turing", "qr", "ldlt", "cholesky", "schur"), default="plu")
    p.add_argument("--pivoting", choices=("none", "partial", "complete", "rook"))
    p.add_argument("--mode", choices=("householder-double", "mgs-exact"))
    p.add_argument("--split", help="r,c block split for --kind schur")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_factor)

    p = sub.add_parser("det", help="exact determinant")
    p.add_argument("--method", choices=("schur", "laplace", "turing"), default="schur")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_det)

    p = sub.add_parser("solve", help="solve A x = b")
    p.add_argument("--rhs", help="comma-separated right-hand side")
    p.add_argument("--method", choices=("turing", "lu"), default="turing")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_solve)

    p = sub.add_parser("inverse", help="exact inverse (verified)")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_inverse)

    p = sub.add_parser("eig", help="eigenvalues: exact when small and rational, else QR")
    p.add_argument("--numeric", action="store_true", help="force the floating-point path")
    p.add_argument("--vectors", action="store_true", help="include eigenvectors (numeric path)")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_eig)

    p = sub.add_parser("svd", help="singular values by one-sided Jacobi")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_svd)

    p = sub.add_parser("companion", help="companion matrices of polynomials")
    p.add_argument("--poly", help='polynomial text, e.g. "z^2-3z+2"')
    p.add_argument("--coeffs", help="Chebyshev coefficients (constant first) for --kind colleague")
    p.add_argument("--kind", choices=("frobenius", "pencil", "colleague"), default="frobenius")
    p.add_argument("--search-height", dest="search_height", type=int,
                   help="search for a minimal-height integer companion (<= this height)")
    _add_format(p)
    p.set_defaults(run=_run_companion)

    p = sub.add_parser("mandelbrot", help="height-1 companion of the Mandelbrot polynomial")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(run=_run_mandelbrot)

    p = sub.add_parser("param", help="case-tree elimination over a parameter")
    p.add_argument("--op", choices=("rref", "det"), default="rref")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_param)

    p = sub.add_parser("gen", help="named matrix generators")
    p.add_argument("--kind", required=True)
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--ops", type=int)
    p.add_argument("--first-row", dest="first_row", help="comma-separated entries")
    p.add_argument("--first-col", dest="first_col", help="comma-separated entries")
    p.add_argument("--last-col", dest="last_col", help="comma-separated entries")
    p.add_argument("--lower", type=int, help="lower bandwidth for --kind banded")
    p.add_argument("--upper", type=int, help="upper bandwidth for --kind banded")
    _add_matrix_io(p)
    _add_format(p)
    p.set_defaults(run=_run_gen)

    p = sub.add_parser("exam", help="exam material helpers")
    p.add_argument("--kind", choices=("unimodular", "mc"), default="unimodular")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--true", type=float, help="true answer for --kind mc")
    p.add_argument("--options", help="comma-separated options for --kind mc")
    _add_format(p)
    p.set_defaults(run=_run_exam)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, help="default 8787; MECHLIN_PORT overrides")
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(run=_run_serve, format="json")

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.run(args)
    except MechlinError as e:
        print(json.dumps(api_error(e)))
        return 1
    if out is not None:
        _emit(out, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
