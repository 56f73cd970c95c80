"""Case-splitting elimination for matrices with one symbolic parameter."""

import random
from fractions import Fraction

import pytest

from mechlin import (
    CaseTree,
    Condition,
    InvalidArgument,
    Leaf,
    ParamMatrix,
    Poly,
    ShapeMismatch,
    parametric_det,
    parametric_rref,
    specialize,
    specialize_leaf,
)
from mechlin.polys import parse_poly

from oracles import rref_fractions


def rows_of(m):
    return [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]


# -- the textbook two-parameter-values example ---------------------------------


def test_symmetric_parameter_matrix_three_leaves():
    tree = parametric_rref(ParamMatrix.from_rows([["a", 1], [1, "a"]]))
    assert tree.param == "a"
    assert [str(lf.condition) for lf in tree.leaves] == [
        "a-1 != 0 and a+1 != 0",
        "a-1 = 0",
        "a+1 = 0",
    ]

    generic, low, high = tree.leaves
    assert generic.rank == 2
    assert str(generic.det) == "a^2-1"
    assert rows_of(generic.rref) == [[1, 0], [0, 1]]

    assert low.rank == 1
    assert low.det.is_zero()
    assert [[str(v) for v in row] for row in rows_of(low.rref)] == [["1", "1"], ["0", "0"]]

    assert high.rank == 1
    assert [[str(v) for v in row] for row in rows_of(high.rref)] == [["1", "-1"], ["0", "0"]]


def test_leaf_for_picks_the_right_case():
    tree = parametric_rref(ParamMatrix.from_rows([["a", 1], [1, "a"]]))
    assert tree.leaf_for(Fraction(1)).rank == 1
    assert tree.leaf_for(Fraction(-1)).rank == 1
    assert tree.leaf_for(Fraction(7, 3)).rank == 2
    assert specialize_leaf(tree, 5) is tree.leaves[0]


def test_leaf_for_requires_exactly_one_match():
    always = Condition(())
    lf = Leaf(always, ParamMatrix.from_rows([[1]]).matrix, 1)
    with pytest.raises(InvalidArgument):
        CaseTree("a", (lf, lf)).leaf_for(Fraction(0))
    with pytest.raises(InvalidArgument):
        CaseTree("a", ()).leaf_for(Fraction(0))


# -- irreducible pivot factors stay symbolic ------------------------------------


def test_irreducible_factor_becomes_quotient_leaf():
    tree = parametric_rref(ParamMatrix.from_rows([["a", 2], [1, "a"]]))
    assert len(tree.leaves) == 2
    generic, quot = tree.leaves
    assert str(generic.condition) == "a^2-2 != 0"
    assert generic.rank == 2

    assert str(quot.condition) == "a^2-2 = 0"
    assert quot.note == "generic_over_constraint"
    assert quot.rank == 1
    assert quot.det.is_zero()
    # on the locus a^2 = 2 the second row is a multiple of the first
    assert [[str(v) for v in row] for row in rows_of(quot.rref)] == [["1", "a"], ["0", "0"]]


def test_constant_matrix_is_one_always_leaf():
    tree = parametric_rref(ParamMatrix.from_rows([[1, 2], [3, 4]]))
    assert len(tree.leaves) == 1
    lf = tree.leaves[0]
    assert str(lf.condition) == "always"
    assert lf.rank == 2
    assert str(lf.det) == "-2"
    assert tree.leaf_for(Fraction(123)) is lf


# -- specialization soundness ----------------------------------------------------


CASES = [
    [["a", 1], [1, "a"]],
    [["a", 2], [1, "a"]],
    [["a", "a^2", 1], [1, "a", 0]],
    [["a+1", 2, "a"], [0, "a-3", 1], [1, 1, 1]],
    [["a^2-1", "a"], ["a", 1]],
]


def test_leaf_rref_matches_direct_elimination_at_rational_points():
    rng = random.Random(11)
    for rows in CASES:
        m = ParamMatrix.from_rows(rows)
        tree = parametric_rref(m)
        points = [Fraction(1), Fraction(-1), Fraction(0), Fraction(3)]
        points += [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(16)]
        for a0 in points:
            lf = tree.leaf_for(a0)
            expect, pivots = rref_fractions(rows_of(specialize(m, a0)))
            got = [[v.eval(a0) for v in row] for row in rows_of(lf.rref)]
            assert got == expect
            assert lf.rank == len(pivots)


def test_rectangular_case_tree_has_no_determinant():
    tree = parametric_rref(ParamMatrix.from_rows([["a", 1, 0], [1, "a", 1]]))
    assert all(lf.det is None for lf in tree.leaves)
    assert all(lf.rank == 2 for lf in tree.leaves)
    with pytest.raises(ShapeMismatch):
        parametric_det(ParamMatrix.from_rows([["a", 1, 0], [1, "a", 1]]))


# -- construction and guards -------------------------------------------------------


def test_param_autodetected_from_entries():
    m = ParamMatrix.from_rows([["t", 1], [1, "t"]])
    assert m.param == "t"
    assert m.shape == (2, 2)
    assert m.max_degree() == 1


def test_mixed_parameters_rejected():
    with pytest.raises(InvalidArgument):
        ParamMatrix.from_rows([["a", "t"], [1, 1]])


def test_complex_coefficients_rejected():
    from mechlin import GaussianRational

    with pytest.raises(InvalidArgument):
        ParamMatrix.from_rows([[Poly((GaussianRational(0, 1),), "a")]])


def test_size_and_degree_caps():
    big = [[1] * 5 for _ in range(5)]
    with pytest.raises(InvalidArgument):
        parametric_rref(ParamMatrix.from_rows(big))
    with pytest.raises(InvalidArgument):
        parametric_rref(ParamMatrix.from_rows([["a^5"]]))


def test_parametric_det_polynomial():
    p = parametric_det(ParamMatrix.from_rows([["a", 1], [1, "a"]]))
    assert p == parse_poly("a^2-1")
