"""Exact scalar layer: Gaussian rationals, square roots, parsing."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mechlin import (
    DivisionByZero,
    GaussianRational,
    gaussian_sqrt,
    is_zero,
    parse_gaussian,
    rational_sqrt,
)
from mechlin.scalars import gaussian_str, one_like, rat, rat_str, to_complex, zero_like


fractions_st = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
gaussians_st = st.builds(GaussianRational, fractions_st, fractions_st)


def test_rat_accepts_ints_strings_and_pairs():
    assert rat(3) == Fraction(3)
    assert rat("3/4") == Fraction(3, 4)
    assert rat(3, 4) == Fraction(3, 4)
    assert rat("-7") == Fraction(-7)
    assert rat_str(Fraction(-7, 2)) == "-7/2"
    assert rat_str(Fraction(4, 2)) == "2"


def test_gaussian_basic_arithmetic():
    z = GaussianRational(Fraction(1, 2), Fraction(3))
    w = GaussianRational(2, -1)
    assert z + w == GaussianRational(Fraction(5, 2), 2)
    assert z - w == GaussianRational(Fraction(-3, 2), 4)
    # (1/2 + 3i)(2 - i) = 1 - i/2 + 6i - 3i^2 = 4 + 11i/2
    assert z * w == GaussianRational(4, Fraction(11, 2))
    assert -z == GaussianRational(Fraction(-1, 2), -3)
    assert z.conjugate() == GaussianRational(Fraction(1, 2), -3)
    assert w.norm() == Fraction(5)


def test_gaussian_division_and_pow():
    z = GaussianRational(3, 4)
    assert z / z == GaussianRational(1)
    assert z * z ** -1 == GaussianRational(1)
    assert z ** 0 == GaussianRational(1)
    assert z ** 3 == z * z * z
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)
    assert 1 / i == GaussianRational(0, -1)


def test_gaussian_division_by_zero():
    with pytest.raises(DivisionByZero):
        GaussianRational(1) / GaussianRational(0)
    with pytest.raises(DivisionByZero):
        GaussianRational(0) ** -1


def test_gaussian_mixes_with_fraction_and_int():
    z = GaussianRational(1, 1)
    assert z + 1 == GaussianRational(2, 1)
    assert 1 + z == GaussianRational(2, 1)
    assert Fraction(1, 2) * z == GaussianRational(Fraction(1, 2), Fraction(1, 2))
    assert z - Fraction(1, 2) == GaussianRational(Fraction(1, 2), 1)


def test_gaussian_is_immutable_and_hashable():
    z = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        z.re = Fraction(9)
    assert hash(GaussianRational(1, 0)) == hash(GaussianRational(1))
    assert len({GaussianRational(1, 2), GaussianRational(1, 2)}) == 1


@given(gaussians_st, gaussians_st, gaussians_st)
def test_gaussian_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(gaussians_st)
def test_gaussian_multiplicative_inverse(z):
    if is_zero(z):
        return
    assert z * (GaussianRational(1) / z) == GaussianRational(1)


def test_is_zero_and_like_helpers():
    assert is_zero(Fraction(0)) and is_zero(GaussianRational(0, 0)) and is_zero(0.0)
    assert not is_zero(GaussianRational(0, Fraction(1, 99)))
    assert zero_like(Fraction(1, 2)) == Fraction(0)
    assert one_like(GaussianRational(5, 5)) == GaussianRational(1)
    assert zero_like(2.5) == 0.0 and one_like(2.5) == 1.0


def test_rational_sqrt_exact_hits_and_misses():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == Fraction(0)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None
    assert rational_sqrt(Fraction(49, 64)) == Fraction(7, 8)


@given(fractions_st)
def test_rational_sqrt_round_trip(x):
    r = rational_sqrt(x * x)
    assert r is not None and r * r == x * x


def test_gaussian_sqrt_known_values():
    # sqrt(-1) = i, sqrt(2i) = 1 + i, sqrt of a positive rational stays real
    assert gaussian_sqrt(GaussianRational(-1)) in (
        GaussianRational(0, 1),
        GaussianRational(0, -1),
    )
    s = gaussian_sqrt(GaussianRational(0, 2))
    assert s is not None and s * s == GaussianRational(0, 2)
    assert gaussian_sqrt(GaussianRational(Fraction(9, 4))) == GaussianRational(Fraction(3, 2))
    assert gaussian_sqrt(GaussianRational(0, 1)) is None  # sqrt(i) is not Gaussian rational


@given(gaussians_st)
def test_gaussian_sqrt_round_trip(z):
    s = gaussian_sqrt(z * z)
    assert s is not None and s * s == z * z


def test_parse_gaussian_forms():
    assert parse_gaussian("3/4") == GaussianRational(Fraction(3, 4))
    assert parse_gaussian("i") == GaussianRational(0, 1)
    assert parse_gaussian("-i") == GaussianRational(0, -1)
    assert parse_gaussian("2-3i") == GaussianRational(2, -3)
    assert parse_gaussian("-1/2+5/3i") == GaussianRational(Fraction(-1, 2), Fraction(5, 3))
    assert parse_gaussian(" 7 ") == GaussianRational(7)


@given(gaussians_st)
def test_gaussian_str_parse_round_trip(z):
    assert parse_gaussian(gaussian_str(z)) == z


def test_to_complex():
    assert to_complex(GaussianRational(1, -2)) == 1 - 2j
    assert to_complex(Fraction(1, 2)) == 0.5 + 0j
