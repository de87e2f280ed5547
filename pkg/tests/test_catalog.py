"""Catalog constructors: realification, matrix algebras, Zorn, direct sums."""

from fractions import Fraction

import pytest

from altderiv.algebra import multiply, validate_algebra
from altderiv.catalog import (
    GONE,
    GZERO,
    CatalogError,
    ComplexStructureSpec,
    direct_sum,
    m2_sum_algebra,
    matrix_star_algebra,
    realify,
    zorn_algebra,
)

F = Fraction


def E(algebra, name):
    return algebra.basis_element(algebra.basis_names.index(name))


def test_realify_complex_line():
    spec = ComplexStructureSpec(
        name="C",
        basis_names=("1",),
        table=(((GONE,),),),
        unit=(GONE,),
        involution=((GONE,),),
    )
    A = realify(spec)
    assert A.dim == 2
    assert A.basis_names == ("1", "i1")
    one, i = A.basis_element(0), A.basis_element(1)
    assert multiply(i, i) == -one
    assert A.involve_coords(i.coords) == (F(0), F(-1))


def test_realified_m2_i_squared(m2):
    ie12, ie21, e11 = E(m2, "iE12"), E(m2, "iE21"), E(m2, "E11")
    assert multiply(ie12, ie21) == -e11


def test_m2_validates(m2):
    report = validate_algebra(m2)
    assert report.valid and report.associative
    assert m2.dim == 8


def test_m3_validates(m3):
    report = validate_algebra(m3)
    assert report.valid and report.associative
    assert m3.dim == 18


def test_matrix_star_algebra_rejects_small():
    with pytest.raises(CatalogError):
        matrix_star_algebra(1)


def test_zorn_basics(zorn):
    assert zorn.dim == 8
    report = validate_algebra(zorn)
    assert report.valid and not report.associative
    e = zorn.named_idempotent("e")
    assert multiply(e, e) == e
    assert zorn.involve_coords(e.coords) == e.coords


def test_zorn_transpose_consistent_with_antiautomorphism(zorn):
    # validated above; spot-check the cross-product sign on one pair
    u1, u2 = E(zorn, "u1"), E(zorn, "u2")
    lhs = zorn.involve_coords(multiply(u1, u2).coords)
    rhs = multiply(
        zorn.element(zorn.involve_coords(u2.coords)),
        zorn.element(zorn.involve_coords(u1.coords)),
    ).coords
    assert tuple(lhs) == tuple(rhs)


def test_direct_sum_dimensions(m2, zorn):
    s = direct_sum(m2, zorn)
    assert s.dim == m2.dim + zorn.dim
    assert validate_algebra(s).valid
    assert not validate_algebra(s).associative  # the Zorn summand


def test_m2_sum_idempotents(m2sum):
    assert m2sum.dim == 16
    report = validate_algebra(m2sum)
    assert report.valid and report.associative
    e = m2sum.named_idempotent("e")
    assert multiply(e, e) == e
    eo = m2sum.named_idempotent("e_onesided")
    assert multiply(eo, eo) == eo
    assert all(x == 0 for x in eo.coords[8:])


def test_realify_propagates_validation_failure():
    # a "unit" that is not actually a unit must be rejected
    spec = ComplexStructureSpec(
        name="broken",
        basis_names=("1",),
        table=(((GONE,),),),
        unit=(GZERO,),
        involution=((GONE,),),
    )
    with pytest.raises(CatalogError):
        realify(spec)
