"""Shared random-instance generators for the test suite.

Acceptance runs use seeded ``random.Random`` streams so every run checks the
exact same instances; hypothesis covers the shrinking/edge-case side.
"""

import random
from fractions import Fraction

from prdual import QMatrix, QVector


def random_rational(rng: random.Random, max_num: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_matrix(rng: random.Random, max_dim: int = 6, max_num: int = 5,
                  max_den: int = 3) -> QMatrix:
    u = rng.randint(1, max_dim)
    v = rng.randint(1, max_dim)
    return QMatrix(u, v, [random_rational(rng, max_num, max_den) for _ in range(u * v)])


def random_vector(rng: random.Random, dim: int, max_num: int = 5, max_den: int = 3) -> QVector:
    return QVector([random_rational(rng, max_num, max_den) for _ in range(dim)])


def random_dependent_matrix(rng: random.Random, max_dim: int = 6) -> QMatrix:
    """Random matrix with at least one row forced into the span of the others."""
    v = rng.randint(1, max_dim)
    base_rows = rng.randint(1, max_dim - 1)
    rows = [[random_rational(rng) for _ in range(v)] for _ in range(base_rows)]
    extra = rng.randint(1, max_dim - base_rows)
    for _ in range(extra):
        coeffs = [random_rational(rng, 3, 2) for _ in range(len(rows))]
        combo = [sum((c * row[j] for c, row in zip(coeffs, rows)), Fraction(0)) for j in range(v)]
        rows.insert(rng.randint(0, len(rows)), combo)
    return QMatrix.from_rows(rows, cols=v)
