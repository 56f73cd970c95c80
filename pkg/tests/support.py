"""Shared scaffolding for the test suite: seeded random matrix builders."""

import random
from fractions import Fraction

from mechlin import Matrix


def rand_fraction_matrix(rng: random.Random, rows: int, cols: int, den_max: int = 4) -> Matrix:
    entries = [
        Fraction(rng.randint(-9, 9), rng.randint(1, den_max))
        for _ in range(rows * cols)
    ]
    return Matrix(rows, cols, entries)


def rand_int_matrix(rng: random.Random, rows: int, cols: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix(rows, cols, [Fraction(rng.randint(lo, hi)) for _ in range(rows * cols)])


def rand_rank_deficient(rng: random.Random, rows: int, cols: int, rank: int) -> Matrix:
    """Product of random rows x rank and rank x cols factors; rank <= min dim."""
    left = rand_int_matrix(rng, rows, rank, -3, 3)
    right = rand_int_matrix(rng, rank, cols, -3, 3)
    from mechlin import matmul

    return matmul(left, right)


def rand_float_matrix(rng: random.Random, rows: int, cols: int, scale: float = 1.0) -> Matrix:
    return Matrix(rows, cols, [rng.uniform(-scale, scale) for _ in range(rows * cols)])
