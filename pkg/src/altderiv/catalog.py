"""Reference algebra constructors.

Complex *-algebras enter the engine only through realification: a
Gaussian-rational algebra of dimension m becomes a rational algebra of
dimension 2m on the basis {b_k, i*b_k}, and its conjugate-linear involution
becomes an honest linear matrix.  The catalog provides realified complex
matrix *-algebras, the Zorn vector-matrix algebra (split octonions) with
the transpose involution, and direct sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraError, StructureAlgebra, validate_algebra

ZERO = Fraction(0)
ONE = Fraction(1)

# Gaussian rationals are (re, im) pairs of Fractions.
GZERO = (ZERO, ZERO)
GONE = (ONE, ZERO)


class CatalogError(AlgebraError):
    """A catalog constructor produced an algebra that failed validation."""


@dataclass(frozen=True)
class ComplexStructureSpec:
    """Structure constants over the Gaussian rationals, with a
    conjugate-linear involution given by a complex matrix sigma:
    x* = sigma . conj(x)."""

    name: str
    basis_names: tuple
    table: tuple  # m x m entries, each a length-m tuple of (re, im) pairs
    unit: tuple  # length-m tuple of (re, im) pairs
    involution: tuple  # m x m of (re, im) pairs; column j = coords of b_j*

    @property
    def dim(self):
        return len(self.basis_names)


def realify(spec: ComplexStructureSpec, idempotents=None) -> StructureAlgebra:
    """Expand a Gaussian-rational algebra to a validated rational algebra.

    Basis order is (b_1, ..., b_m, i*b_1, ..., i*b_m).  Raises CatalogError
    if the resulting algebra fails validation.
    """
    m = spec.dim
    d = 2 * m
    names = list(spec.basis_names) + [f"i{b}" for b in spec.basis_names]

    def real_vec(gvec, mul_i=False, negate=False):
        # coordinates of (+-1 or +-i) * (sum gvec_l b_l) in the real basis
        out = [ZERO] * d
        for l, (re, im) in enumerate(gvec):
            if mul_i:
                re, im = -im, re
            if negate:
                re, im = -re, -im
            out[l] = re
            out[m + l] = im
        return tuple(out)

    table = [[None] * d for _ in range(d)]
    for j in range(m):
        for k in range(m):
            prod = spec.table[j][k]
            table[j][k] = real_vec(prod)
            table[j][m + k] = real_vec(prod, mul_i=True)
            table[m + j][k] = real_vec(prod, mul_i=True)
            table[m + j][m + k] = real_vec(prod, negate=True)

    unit = real_vec(spec.unit)

    sigma = [[ZERO] * d for _ in range(d)]
    for j in range(m):
        for l in range(m):
            re, im = spec.involution[l][j]
            sigma[l][j] = re
            sigma[m + l][j] = im
            sigma[l][m + j] = im
            sigma[m + l][m + j] = -re

    A = StructureAlgebra(spec.name, names, table, unit, sigma, idempotents)
    report = validate_algebra(A)
    if not report.valid:
        first = report.failures[0]
        raise CatalogError(
            f"realification of {spec.name!r} failed validation: {first.describe(A)}"
        )
    return A


def matrix_star_algebra(size: int) -> StructureAlgebra:
    """Realified k x k Gaussian-rational matrix algebra with the
    conjugate-transpose involution; idempotent "e" is the (1,1) matrix unit."""
    k = size
    if k < 2:
        raise CatalogError("matrix_star_algebra needs size >= 2")
    m = k * k
    names = tuple(f"E{p + 1}{q + 1}" for p in range(k) for q in range(k))

    def unit_idx(p, q):
        return p * k + q

    table = []
    for p in range(k):
        for q in range(k):
            row = []
            for r in range(k):
                for s in range(k):
                    vec = [GZERO] * m
                    if q == r:
                        vec[unit_idx(p, s)] = GONE
                    row.append(tuple(vec))
            table.append(tuple(row))

    unit = [GZERO] * m
    for p in range(k):
        unit[unit_idx(p, p)] = GONE

    invol = [[GZERO] * m for _ in range(m)]
    for p in range(k):
        for q in range(k):
            invol[unit_idx(q, p)][unit_idx(p, q)] = GONE

    spec = ComplexStructureSpec(
        name=f"M{k}",
        basis_names=names,
        table=tuple(table),
        unit=tuple(unit),
        involution=tuple(tuple(r) for r in invol),
    )
    e = [ZERO] * (2 * m)
    e[unit_idx(0, 0)] = ONE
    return realify(spec, idempotents={"e": tuple(e)})


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def zorn_mult(x: Sequence, y: Sequence):
    """Zorn vector-matrix product on coordinates (a, b, v[3], w[3]).

    An element [[a, v], [w, b]] has scalar diagonal a, b and 3-vector
    off-diagonal entries v (position 1,2) and w (position 2,1); products use
    the dot and cross products of the vector parts.
    """
    a1, b1 = x[0], x[1]
    v1, w1 = x[2:5], x[5:8]
    a2, b2 = y[0], y[1]
    v2, w2 = y[2:5], y[5:8]
    out_a = a1 * a2 + _dot3(v1, w2)
    out_b = _dot3(w1, v2) + b1 * b2
    cv = _cross(w1, w2)
    out_v = tuple(a1 * v2[i] + b2 * v1[i] - cv[i] for i in range(3))
    cw = _cross(v1, v2)
    out_w = tuple(a2 * w1[i] + b1 * w2[i] + cw[i] for i in range(3))
    return (out_a, out_b) + out_v + out_w


def zorn_algebra() -> StructureAlgebra:
    """Split octonions as Zorn vector matrices over Q.

    The involution is the transpose swap [[a, v], [w, b]] -> [[a, w], [v, b]],
    which fixes the diagonal idempotent e = [[1, 0], [0, 0]]; the standard
    octonion conjugation would send e to 1 - e and is therefore not used.
    """
    names = ("e1", "e2", "u1", "u2", "u3", "w1", "w2", "w3")
    d = 8
    basis = []
    for i in range(d):
        vec = [ZERO] * d
        vec[i] = ONE
        basis.append(tuple(vec))
    table = tuple(
        tuple(zorn_mult(basis[i], basis[j]) for j in range(d)) for i in range(d)
    )
    unit = (ONE, ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO)
    sigma = [[ZERO] * d for _ in range(d)]
    sigma[0][0] = sigma[1][1] = ONE
    for i in range(3):
        sigma[5 + i][2 + i] = ONE  # u_i* = w_i
        sigma[2 + i][5 + i] = ONE  # w_i* = u_i
    e = (ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO)
    A = StructureAlgebra("Zorn", names, table, unit, sigma, idempotents={"e": e})
    report = validate_algebra(A)
    if not report.valid:
        raise CatalogError(f"Zorn table failed validation: {report.failures[0]}")
    return A


def direct_sum(A: StructureAlgebra, B: StructureAlgebra, name=None) -> StructureAlgebra:
    """Componentwise product algebra with componentwise involution."""
    da, db = A.dim, B.dim
    d = da + db
    names = tuple(f"l.{n}" for n in A.basis_names) + tuple(
        f"r.{n}" for n in B.basis_names
    )

    def embed_a(vec):
        return tuple(vec) + (ZERO,) * db

    def embed_b(vec):
        return (ZERO,) * da + tuple(vec)

    zero = (ZERO,) * d
    table = []
    for i in range(da):
        row = [embed_a(A.table[i][j]) for j in range(da)] + [zero] * db
        table.append(tuple(row))
    for i in range(db):
        row = [zero] * da + [embed_b(B.table[i][j]) for j in range(db)]
        table.append(tuple(row))

    unit = tuple(A.unit) + tuple(B.unit)
    sigma = [[ZERO] * d for _ in range(d)]
    for i in range(da):
        for j in range(da):
            sigma[i][j] = A.involution[i, j]
    for i in range(db):
        for j in range(db):
            sigma[da + i][da + j] = B.involution[i, j]

    out = StructureAlgebra(
        name or f"{A.name}+{B.name}", names, table, unit, sigma
    )
    report = validate_algebra(out)
    if not report.valid:
        raise CatalogError(f"direct sum failed validation: {report.failures[0]}")
    return out


def m2_sum_algebra() -> StructureAlgebra:
    """M2 + M2 with two named idempotents: "e" is nontrivial in both
    summands, "e_onesided" vanishes on the second summand (a negative
    control for the faithfulness hypotheses)."""
    m2 = matrix_star_algebra(2)
    out = direct_sum(m2, m2, name="M2+M2")
    e_local = m2.idempotents["e"]
    zero = (ZERO,) * m2.dim
    out.idempotents.update(
        {
            "e": tuple(e_local) + tuple(e_local),
            "e_onesided": tuple(e_local) + zero,
        }
    )
    return out


CATALOG = {
    "m2": lambda: matrix_star_algebra(2),
    "m3": lambda: matrix_star_algebra(3),
    "zorn": zorn_algebra,
    "m2sum": m2_sum_algebra,
}
