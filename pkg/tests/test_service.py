"""HTTP facade: a golden fixture per route, error shaping, port resolution."""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from mechlin.errors import InvalidArgument
from mechlin.service import DEFAULT_PORT, ROUTES, build_app, resolve_port

GOLDEN_DIR = Path(__file__).parent / "goldens"
GOLDENS = sorted(GOLDEN_DIR.glob("*.json"))


@pytest.fixture(scope="module")
def client():
    with TestClient(build_app()) as c:
        yield c


def tolerant_equal(got, want, tol=1e-9):
    """Floats within tol, everything else (keys included) exact."""
    if isinstance(want, float) and not isinstance(want, bool):
        return isinstance(got, (int, float)) and abs(float(got) - want) <= tol
    if isinstance(want, dict):
        return (
            isinstance(got, dict)
            and got.keys() == want.keys()
            and all(tolerant_equal(got[k], want[k], tol) for k in want)
        )
    if isinstance(want, list):
        return (
            isinstance(got, list)
            and len(got) == len(want)
            and all(tolerant_equal(g, w, tol) for g, w in zip(got, want))
        )
    return got == want


@pytest.mark.parametrize("path", GOLDENS, ids=lambda p: p.stem)
def test_golden(client, path):
    case = json.loads(path.read_text())
    resp = client.post(case["route"], json=case["request"])
    assert resp.status_code == 200, resp.text
    body = resp.json()
    if case["compare"] == "exact":
        assert body == case["expect"]
    else:
        assert tolerant_equal(body, case["expect"]), (body, case["expect"])


def test_goldens_cover_every_route():
    fixed = {json.loads(p.read_text())["route"] for p in GOLDENS}
    assert fixed == set(ROUTES)


def test_health(client):
    resp = client.get("/v1/health")
    assert resp.status_code == 200
    assert resp.json() == {"ok": True}


def test_unknown_route_shaped_404(client):
    resp = client.post("/v1/cholesky-by-mail", json={})
    assert resp.status_code == 404
    body = resp.json()
    assert body["code"] == "NotFound"
    assert "/v1/cholesky-by-mail" in body["message"]
    assert body["detail"] == {}


RAT = lambda rows: {
    "scalar": "rational",
    "rows": len(rows),
    "cols": len(rows[0]),
    "entries": rows,
}

ERROR_CASES = [
    ("/v1/parse", {"text": "x*y = 1"}, "NonlinearError"),
    ("/v1/parse", {"text": "x^2 = 1"}, "SyntaxError"),
    ("/v1/det", {"matrix": RAT([["1", "2", "3"], ["4", "5", "6"]])}, "ShapeMismatch"),
    ("/v1/factor", {"matrix": RAT([["0", "1"], ["1", "0"]]), "kind": "plu", "pivoting": "none"}, "ZeroPivot"),
    ("/v1/factor", {"matrix": RAT([["1", "2"], ["2", "1"]]), "kind": "cholesky"}, "NotPositiveDefinite"),
    ("/v1/factor", {"matrix": RAT([["0", "1"], ["1", "0"]]), "kind": "schur", "split": [1, 1]}, "SingularBlock"),
    ("/v1/inverse", {"matrix": RAT([["1", "2"], ["2", "4"]])}, "Singular"),
    ("/v1/gen", {"kind": "cayley", "matrix": RAT([["0", "1"], ["1", "0"]])}, "NotSkewSymmetric"),
    ("/v1/param/rref", {"matrix": {"scalar": "poly", "rows": 1, "cols": 2, "entries": [["a", "t"]]}}, "VariableMismatch"),
    ("/v1/exam/mc", {"true_value": 1.0, "options": [1.5, 2.0]}, "NoValidOption"),
    ("/v1/companion", {"poly": "z^2-100", "search_height": 2}, "NotFound"),
    ("/v1/solve", {"rhs": ["1"]}, "InvalidArgument"),
    # ring scalars cannot feed division-based ops; the guard must shape this
    ("/v1/inverse", {"matrix": {"scalar": "poly", "rows": 1, "cols": 1, "entries": [["a"]]}}, "InvalidArgument"),
    ("/v1/svd", {"matrix": {"scalar": "poly", "rows": 1, "cols": 1, "entries": [["a"]]}}, "InvalidArgument"),
]


@pytest.mark.parametrize("route,body,code", ERROR_CASES, ids=lambda v: v if isinstance(v, str) and v[0] != "/" else None)
def test_domain_errors_are_400_with_code(client, route, body, code):
    resp = client.post(route, json=body)
    assert resp.status_code == 400, resp.text
    payload = resp.json()
    assert payload["code"] == code
    assert payload["message"]
    assert isinstance(payload["detail"], dict)


def test_error_details_carry_positions_and_pivots(client):
    resp = client.post("/v1/parse", json={"text": "x^2 = 1"})
    assert resp.json()["detail"]["position"] >= 0
    resp = client.post(
        "/v1/factor",
        json={"matrix": RAT([["0", "1"], ["1", "0"]]), "kind": "plu", "pivoting": "none"},
    )
    assert resp.json()["detail"] == {"k": 0}


def test_body_must_be_a_json_object(client):
    resp = client.post("/v1/det", json=[1, 2, 3])
    assert resp.status_code == 400
    assert resp.json()["code"] == "InvalidArgument"
    resp = client.post("/v1/det", content="{nope", headers={"Content-Type": "application/json"})
    assert resp.status_code == 400
    assert resp.json()["code"] == "InvalidArgument"


def test_exact_matrices_round_trip_bit_for_bit(client):
    doc = RAT([["2", "1"], ["1", "3"]])
    once = client.post("/v1/inverse", json={"matrix": doc}).json()["inverse"]
    twice = client.post("/v1/inverse", json={"matrix": once}).json()["inverse"]
    assert twice == doc

    eye = {"scalar": "gaussian", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
    v = ["1/2+3i", "-i"]
    out = client.post("/v1/apply", json={"matrix": eye, "vector": v}).json()["vector"]
    assert out == v


def test_resolve_port(monkeypatch):
    monkeypatch.delenv("MECHLIN_PORT", raising=False)
    assert resolve_port() == DEFAULT_PORT == 8787
    assert resolve_port(9000) == 9000
    monkeypatch.setenv("MECHLIN_PORT", "8112")
    assert resolve_port(9000) == 8112
    monkeypatch.setenv("MECHLIN_PORT", "lots")
    with pytest.raises(InvalidArgument):
        resolve_port()
