"""Exact linear algebra: RREF, kernels, canonical subspace comparison."""

import random
from fractions import Fraction

import pytest

from altderiv.linalg import (
    LinAlgError,
    RatMatrix,
    SubspaceBasis,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    rref,
    subspace_equal,
)

F = Fraction


def random_matrix(rng, rows, cols, density=0.7):
    data = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.random() < density:
                row.append(F(rng.randint(-9, 9), rng.randint(1, 5)))
            else:
                row.append(F(0))
        data.append(row)
    return RatMatrix(data)


def test_parse_rational():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == F(-7)
    assert parse_rational("+2/6") == F(1, 3)
    for bad in ["2/0", "1.5", "a", "3 / 4", "", "1/-2"]:
        with pytest.raises(LinAlgError):
            parse_rational(bad)


def test_format_rational_round_trips():
    for q in [F(0), F(5), F(-3, 7), F(22, 4)]:
        assert parse_rational(format_rational(q)) == q


def test_rref_identity_fixed_point():
    m = RatMatrix.identity(2)
    assert rref(m) == m


def test_rref_single_row_scaling():
    assert rref(RatMatrix([[2, 4]])) == RatMatrix([[1, 2]])


def test_rref_duplicate_rows():
    m = RatMatrix([[1, 1], [1, 1]])
    assert rref(m) == RatMatrix([[1, 1], [0, 0]])


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(20240901)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        r = rref(m)
        assert rref(r) == r
        assert r.shape == m.shape


def test_kernel_one_equation():
    ker = kernel_basis(RatMatrix([[1, 1]]))
    assert ker.dim == 1
    assert ker.vectors == ((F(1), F(-1)),)


def test_kernel_of_identity_is_trivial():
    assert kernel_basis(RatMatrix.identity(3)).dim == 0


def test_kernel_of_zero_map_is_everything():
    ker = kernel_basis(RatMatrix([[0, 0]]))
    assert ker.dim == 2
    assert ker.vectors == ((F(1), F(0)), (F(0), F(1)))


def test_kernel_vectors_annihilate_and_rank_nullity():
    rng = random.Random(77)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        ker = kernel_basis(m)
        assert rank(m) + ker.dim == m.cols
        for v in ker.vectors:
            assert all(x == 0 for x in m.apply(v))


def test_subspace_equal_full_plane():
    a = SubspaceBasis(2, [(1, 0), (0, 1)])
    b = SubspaceBasis(2, [(1, 1), (1, -1)])
    assert subspace_equal(a, b)


def test_subspace_equal_distinct_lines():
    a = SubspaceBasis(2, [(1, 0)])
    b = SubspaceBasis(2, [(0, 1)])
    assert not subspace_equal(a, b)


def test_subspace_equal_dimension_mismatch_raises():
    with pytest.raises(LinAlgError):
        subspace_equal(SubspaceBasis(2, [(1, 0)]), SubspaceBasis(3, [(1, 0, 0)]))


def test_subspace_equal_invariant_under_basis_change():
    rng = random.Random(1234)
    for _ in range(25):
        n = rng.randint(2, 5)
        k = rng.randint(1, n)
        vecs = [[F(rng.randint(-5, 5)) for _ in range(n)] for _ in range(k)]
        a = SubspaceBasis(n, vecs)
        # random invertible-ish recombination of the same spanning set
        mixed = []
        for _ in range(k + 1):
            coeffs = [F(rng.randint(-3, 3)) for _ in range(k)]
            mixed.append(
                [sum(c * v[i] for c, v in zip(coeffs, vecs)) for i in range(n)]
            )
        b = SubspaceBasis(n, mixed)
        assert subspace_equal(a, b) == a.contains(b) and b.dim <= a.dim
        assert a.contains(b)
        assert subspace_equal(a, a)
        assert subspace_equal(a, b) == subspace_equal(b, a)


def test_containment_and_membership():
    plane = SubspaceBasis(3, [(1, 0, 0), (0, 1, 0)])
    line = SubspaceBasis(3, [(2, -3, 0)])
    other = SubspaceBasis(3, [(0, 0, 1)])
    assert plane.contains(line)
    assert not plane.contains(other)
    assert plane.contains_vector((F(5), F(7), F(0)))
    assert not plane.contains_vector((0, 0, 1))


def test_ragged_matrix_rejected():
    with pytest.raises(LinAlgError):
        RatMatrix([[1, 2], [3]])


def test_matrix_apply_and_products():
    m = RatMatrix([[1, 2], [3, 4]])
    assert m.apply((F(1), F(1))) == (F(3), F(7))
    assert (m * RatMatrix.identity(2)) == m
    assert (m - m).is_zero()
    assert m.transpose() == RatMatrix([[1, 3], [2, 4]])
