"""Shared fixtures: catalog algebras and cached derivation-space solves."""

from fractions import Fraction

import pytest

from altderiv.catalog import (
    m2_sum_algebra,
    matrix_star_algebra,
    zorn_algebra,
)
from altderiv.algebra import StructureAlgebra


@pytest.fixture(scope="session")
def m2():
    return matrix_star_algebra(2)


@pytest.fixture(scope="session")
def m3():
    return matrix_star_algebra(3)


@pytest.fixture(scope="session")
def zorn():
    return zorn_algebra()


@pytest.fixture(scope="session")
def m2sum():
    return m2_sum_algebra()


@pytest.fixture(scope="session")
def qq():
    """Q x Q with componentwise product and the identity involution."""
    one = Fraction(1)
    zero = Fraction(0)
    table = [
        [(one, zero), (zero, zero)],
        [(zero, zero), (zero, one)],
    ]
    return StructureAlgebra(
        "QxQ",
        ("p", "q"),
        table,
        (one, one),
        [[one, zero], [zero, one]],
        idempotents={"e": (one, zero)},
    )


@pytest.fixture(scope="session")
def solve_cache():
    """Memoized solve_space results shared across test modules."""
    from altderiv import solver

    cache = {}

    def solve(algebra, kind, n=None):
        key = (algebra.name, kind, n)
        if key not in cache:
            cache[key] = solver.solve_space(algebra, kind, n)
        return cache[key]

    return solve
