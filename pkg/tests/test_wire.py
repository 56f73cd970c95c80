"""JSON wire format: scalar encodings, matrix documents, error shaping."""

from fractions import Fraction

import pytest

from mechlin import GaussianRational, InvalidArgument, Matrix, VariableMismatch
from mechlin.polys import Poly, RatFunc, parse_poly
from mechlin.wire import (
    SCALAR_KINDS,
    api_error,
    complex_pair,
    detect_scalar,
    doc_to_matrix,
    matrix_to_doc,
    scalar_to_wire,
    vector_to_wire,
    wire_to_scalar,
    wire_to_vector,
)
from mechlin import errors


def test_detect_scalar():
    assert detect_scalar(3) == "rational"
    assert detect_scalar(Fraction(1, 2)) == "rational"
    assert detect_scalar(GaussianRational(1, 2)) == "gaussian"
    assert detect_scalar(1.5) == "double"
    assert detect_scalar(2 + 3j) == "double"
    assert detect_scalar(parse_poly("a+1")) == "poly"
    assert detect_scalar(RatFunc(parse_poly("a"))) == "poly"
    with pytest.raises(InvalidArgument):
        detect_scalar(True)
    with pytest.raises(InvalidArgument):
        detect_scalar(object())


def test_scalar_round_trips():
    cases = [
        ("rational", Fraction(-7, 3)),
        ("rational", Fraction(4)),
        ("gaussian", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
        ("gaussian", GaussianRational(0, 1)),
        ("double", 1.5),
        ("double", -0.0),
        ("poly", parse_poly("a^2-1")),
        ("poly", parse_poly("3")),
    ]
    for kind, v in cases:
        assert wire_to_scalar(scalar_to_wire(v, kind), kind) == v


def test_exact_scalars_travel_as_strings():
    assert scalar_to_wire(Fraction(1, 2), "rational") == "1/2"
    assert scalar_to_wire(GaussianRational(1, 2), "gaussian") == "1+2i"
    assert scalar_to_wire(0.25, "double") == 0.25
    # a proper rational function is emitted for display, one way
    rf = RatFunc(parse_poly("1"), parse_poly("a+1"))
    assert scalar_to_wire(rf, "poly") == "(1)/(a+1)"


def test_wire_to_scalar_accepts_plain_ints():
    assert wire_to_scalar(3, "rational") == Fraction(3)
    assert wire_to_scalar(2, "gaussian") == GaussianRational(2)
    assert wire_to_scalar(2, "double") == 2.0
    assert wire_to_scalar(2, "poly") == Poly((2,), "a")


def test_wire_to_scalar_rejections():
    bad = [
        (0.5, "rational"),  # floats cannot sneak into exact lanes
        (True, "rational"),
        ("2/0", "rational"),
        ("elephant", "rational"),
        (0.5, "gaussian"),
        ("1+", "gaussian"),
        ("x", "double"),
        (True, "double"),
        (0.5, "poly"),
    ]
    for x, kind in bad:
        with pytest.raises(Exception) as e:
            wire_to_scalar(x, kind)
        assert isinstance(e.value, errors.MechlinError), (x, kind)
    with pytest.raises(InvalidArgument):
        wire_to_scalar("1", "quaternion")


def test_doc_round_trips_bit_exact():
    mats = [
        Matrix.from_rows([[Fraction(1, 3), Fraction(-2)], [Fraction(0), Fraction(5, 7)]]),
        Matrix.from_rows([[GaussianRational(1, -1), GaussianRational(0, 2)]]),
        Matrix.from_rows([[0.1, 2.5], [-3.75, 0.0]]),
        Matrix.from_rows([[parse_poly("a"), parse_poly("a^2+1")], [parse_poly("2"), parse_poly("a-1")]]),
    ]
    for a in mats:
        doc = matrix_to_doc(a)
        b, kind = doc_to_matrix(doc)
        assert b == a
        assert kind == doc["scalar"]
        assert matrix_to_doc(b) == doc  # stable under a second trip


def test_doc_shape_and_kind_validation():
    with pytest.raises(InvalidArgument):
        doc_to_matrix([1, 2])
    with pytest.raises(InvalidArgument) as e:
        doc_to_matrix({"scalar": "rational"})
    assert "rows" in str(e.value) and "entries" in str(e.value)
    with pytest.raises(InvalidArgument):
        doc_to_matrix({"scalar": "octonion", "rows": 1, "cols": 1, "entries": [["1"]]})
    with pytest.raises(InvalidArgument):
        doc_to_matrix({"scalar": "rational", "rows": 0, "cols": 1, "entries": []})
    with pytest.raises(InvalidArgument):
        doc_to_matrix({"scalar": "rational", "rows": 2, "cols": 1, "entries": [["1"]]})
    with pytest.raises(InvalidArgument):
        doc_to_matrix({"scalar": "rational", "rows": 1, "cols": 2, "entries": [["1"]]})


def test_poly_doc_variables_unified():
    doc = {"scalar": "poly", "rows": 1, "cols": 2, "entries": [["t+1", "3"]]}
    m, _ = doc_to_matrix(doc)
    assert m[0, 1].var == "t"  # constants adopt the shared parameter
    bad = {"scalar": "poly", "rows": 1, "cols": 2, "entries": [["t+1", "s"]]}
    with pytest.raises(VariableMismatch):
        doc_to_matrix(bad)


def test_vector_wire():
    v = Matrix.from_rows([[Fraction(1, 2)], [Fraction(3)]])
    xs = vector_to_wire(v, "rational")
    assert xs == ["1/2", "3"]
    assert wire_to_vector(xs, "rational") == v
    with pytest.raises(InvalidArgument):
        vector_to_wire(Matrix.from_rows([[1, 2]]), "rational")
    with pytest.raises(InvalidArgument):
        wire_to_vector([], "rational")


def test_complex_pair():
    assert complex_pair(1.5 - 2j) == [1.5, -2.0]
    assert complex_pair(complex(3)) == [3.0, 0.0]


def test_every_error_code_shapes_cleanly():
    instances = [
        (errors.DivisionByZero("1/0"), "DivisionByZero", {}),
        (errors.ShapeMismatch("2x3 vs 4x4"), "ShapeMismatch", {}),
        (errors.ZeroPivot(2), "ZeroPivot", {"k": 2}),
        (errors.Singular("no inverse"), "Singular", {}),
        (errors.SingularBlock("A11"), "SingularBlock", {}),
        (errors.RankDeficient(col=1), "RankDeficient", {"col": 1}),
        (errors.NotPositiveDefinite(3), "NotPositiveDefinite", {"k": 3}),
        (errors.NotSkewSymmetric("S^T != -S"), "NotSkewSymmetric", {}),
        (errors.NonlinearError("x*y"), "NonlinearError", {}),
        (errors.ParseError("unexpected '^'", position=5), "SyntaxError", {"position": 5}),
        (errors.VariableMismatch("a vs t"), "VariableMismatch", {}),
        (errors.NonConvergence("cap hit"), "NonConvergence", {}),
        (errors.ConstructionError("self-check failed"), "ConstructionError", {}),
        (errors.NoValidOption("no option within 10%"), "NoValidOption", {}),
        (errors.NotFound("no such route"), "NotFound", {}),
        (errors.InvalidArgument("bad field"), "InvalidArgument", {}),
    ]
    seen = set()
    for exc, code, extra in instances:
        body = api_error(exc)
        assert body["code"] == code
        assert body["message"]  # never empty
        assert body["detail"] == extra
        assert isinstance(exc, errors.MechlinError)
        seen.add(code)
    assert len(seen) == len(instances)  # codes stay distinct


def test_kind_list_is_closed():
    assert SCALAR_KINDS == ("rational", "gaussian", "double", "poly")
    with pytest.raises(InvalidArgument):
        scalar_to_wire(1, "decimal")
