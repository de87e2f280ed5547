"""Structure-constant algebras with involution and the Jordan bullet product.

An algebra is given by its dimension, a multiplication table (entry [i][j]
is the coordinate vector of basis_i * basis_j), a unit vector, and a linear
involution matrix.  Validity (unit axiom, involution axioms, linearized
alternativity) is checked by ``validate_algebra``; catalog constructors run
the check and refuse to return an invalid algebra.

The bullet product is a . b = ab + b a*, extended to left-nested n-fold
products, the two-slot specialization xi_a(x, y), and products with a
single replaced factor (``nested_with_insertion``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import RatMatrix

ZERO = Fraction(0)


class AlgebraError(ValueError):
    pass


class AlgebraMismatch(AlgebraError):
    """Two elements of different algebras were combined."""


def check_arity(n: int) -> int:
    """Validate a nested-product arity (an integer >= 2)."""
    if not isinstance(n, int) or n < 2:
        raise AlgebraError(f"product arity must be an integer >= 2, got {n!r}")
    return n


class StructureAlgebra:
    """Finite-dimensional algebra over Q defined by structure constants.

    Immutable after construction.  ``idempotents`` is optional metadata
    naming distinguished coordinate vectors (used by catalog exports and
    the CLI's --idempotent lookup).
    """

    def __init__(self, name, basis_names, table, unit, involution, idempotents=None):
        self.name = str(name)
        self.basis_names = tuple(str(b) for b in basis_names)
        self.dim = len(self.basis_names)
        d = self.dim
        tab = []
        for i, row in enumerate(table):
            if len(row) != d:
                raise AlgebraError(f"table row {i} has {len(row)} entries, expected {d}")
            trow = []
            for j, vec in enumerate(row):
                if len(vec) != d:
                    raise AlgebraError(
                        f"table[{i}][{j}] has length {len(vec)}, expected {d}"
                    )
                trow.append(tuple(Fraction(x) for x in vec))
            tab.append(tuple(trow))
        self.table = tuple(tab)
        if len(unit) != d:
            raise AlgebraError("unit vector length does not match dimension")
        self.unit = tuple(Fraction(x) for x in unit)
        if not isinstance(involution, RatMatrix):
            involution = RatMatrix(involution)
        if involution.shape != (d, d):
            raise AlgebraError("involution matrix shape does not match dimension")
        self.involution = involution
        self.idempotents = {
            str(k): tuple(Fraction(x) for x in v)
            for k, v in (idempotents or {}).items()
        }
        # sparse table: nonzero (index, coeff) pairs per basis product
        self._sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(vec) if c)
                for vec in row
            )
            for row in self.table
        )

    # -- elements ---------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        coords = tuple(Fraction(x) for x in coords)
        if len(coords) != self.dim:
            raise AlgebraError("coordinate length does not match dimension")
        return AlgebraElement(self, coords)

    def basis_element(self, i) -> "AlgebraElement":
        coords = [ZERO] * self.dim
        coords[i] = Fraction(1)
        return AlgebraElement(self, tuple(coords))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (ZERO,) * self.dim)

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def named_idempotent(self, name) -> "AlgebraElement":
        if name not in self.idempotents:
            raise AlgebraError(f"algebra {self.name!r} has no idempotent named {name!r}")
        return self.element(self.idempotents[name])

    # -- raw coordinate arithmetic ----------------------------------------

    def multiply_coords(self, a, b):
        out = [ZERO] * self.dim
        sparse = self._sparse
        for i, x in enumerate(a):
            if not x:
                continue
            row = sparse[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for k, t in row[j]:
                    out[k] += c * t
        return tuple(out)

    def involve_coords(self, a):
        return self.involution.apply(a)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.name == other.name
            and self.basis_names == other.basis_names
            and self.table == other.table
            and self.unit == other.unit
            and self.involution == other.involution
            and self.idempotents == other.idempotents
        )

    def __repr__(self):
        return f"StructureAlgebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class AlgebraElement:
    """Element of a StructureAlgebra, held as an exact coordinate vector."""

    algebra: StructureAlgebra
    coords: tuple

    def _join(self, other):
        if not isinstance(other, AlgebraElement):
            raise AlgebraMismatch(f"expected an algebra element, got {other!r}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(
                f"elements of {self.algebra.name!r} and {other.algebra.name!r} mixed"
            )
        return other

    def __add__(self, other):
        other = self._join(other)
        return AlgebraElement(
            self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        other = self._join(other)
        return AlgebraElement(
            self.algebra, tuple(x - y for x, y in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-x for x in self.coords))

    def __rmul__(self, scalar):
        c = Fraction(scalar)
        return AlgebraElement(self.algebra, tuple(c * x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return NotImplemented

    def star(self):
        return involve(self)

    def bullet(self, other):
        return jordan_product(self, other)

    def is_zero(self):
        return all(x == 0 for x in self.coords)

    def __repr__(self):
        terms = [
            f"{c}*{self.algebra.basis_names[i]}"
            for i, c in enumerate(self.coords)
            if c
        ]
        return " + ".join(terms) if terms else "0"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product from the structure-constant table."""
    b = a._join(b)
    return AlgebraElement(a.algebra, a.algebra.multiply_coords(a.coords, b.coords))


def involve(a: AlgebraElement) -> AlgebraElement:
    """Apply the algebra's involution."""
    return AlgebraElement(a.algebra, tuple(a.algebra.involve_coords(a.coords)))


def jordan_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The bullet product a . b = ab + b a*."""
    b = a._join(b)
    A = a.algebra
    astar = A.involve_coords(a.coords)
    left = A.multiply_coords(a.coords, b.coords)
    right = A.multiply_coords(b.coords, astar)
    return AlgebraElement(A, tuple(x + y for x, y in zip(left, right)))


def nested_product(args: Sequence[AlgebraElement]) -> AlgebraElement:
    """Left-nested fold of the bullet product over at least two factors."""
    if len(args) < 2:
        raise AlgebraError("nested product needs at least two factors")
    acc = args[0]
    for x in args[1:]:
        acc = jordan_product(acc, x)
    return acc


def xi(a: AlgebraElement, x: AlgebraElement, y: AlgebraElement, n: int) -> AlgebraElement:
    """n-fold nested product with n-2 leading copies of ``a`` then x, y.

    For n = 2 this is exactly x . y (the prefix is empty and ``a`` is unused).
    """
    check_arity(n)
    return nested_product([a] * (n - 2) + [x, y])


def nested_with_insertion(
    k: int, w: AlgebraElement, u: AlgebraElement, v: AlgebraElement, n: int
) -> AlgebraElement:
    """Nested product of (1, ..., 1, u, v) with slot k (1-based) replaced by w.

    Slots 1..n-2 hold the unit, slot n-1 holds u, slot n holds v; slot k is
    replaced by w.  Multilinear in (w, u, v).
    """
    check_arity(n)
    if not 1 <= k <= n:
        raise AlgebraError(f"insertion position {k} out of range 1..{n}")
    one = w.algebra.one()
    slots = [one] * (n - 2) + [u, v]
    slots[k - 1] = w
    return nested_product(slots)


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class CheckFailure:
    axiom: str
    witness: tuple
    detail: str

    def describe(self, algebra: Optional[StructureAlgebra] = None) -> str:
        if algebra is not None:
            names = tuple(
                algebra.basis_names[i] if isinstance(i, int) else i
                for i in self.witness
            )
        else:
            names = self.witness
        return f"{self.axiom} failed at {names}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    algebra_name: str
    valid: bool
    associative: bool
    failures: tuple
    associator_witness: Optional[tuple]  # (i, j, k) basis indices, or None

    def summary(self) -> str:
        status = "valid" if self.valid else "invalid"
        assoc = "associative" if self.associative else "non-associative"
        return f"{self.algebra_name}: {status}, {assoc}"


def _associator(A, bi, bj, bk):
    ij = A.multiply_coords(bi, bj)
    jk = A.multiply_coords(bj, bk)
    left = A.multiply_coords(ij, bk)
    right = A.multiply_coords(bi, jk)
    return tuple(x - y for x, y in zip(left, right))


def validate_algebra(A: StructureAlgebra) -> ValidationReport:
    """Check unit, involution, and linearized-alternativity axioms.

    Alternativity is verified through the characteristic-0 linearization:
    the associator must alternate in the first two and in the last two
    arguments on every basis triple.  Associativity (all associators zero)
    is reported as information and never required.
    """
    d = A.dim
    failures = []
    basis_coords = [A.basis_element(i).coords for i in range(d)]

    for i in range(d):
        got = A.multiply_coords(A.unit, basis_coords[i])
        if got != basis_coords[i]:
            failures.append(CheckFailure("unit-left", (i,), f"1*b = {got}"))
        got = A.multiply_coords(basis_coords[i], A.unit)
        if got != basis_coords[i]:
            failures.append(CheckFailure("unit-right", (i,), f"b*1 = {got}"))

    sigma = A.involution
    if sigma * sigma != RatMatrix.identity(d):
        failures.append(CheckFailure("involution-squared", (), "sigma^2 != id"))
    for i in range(d):
        for j in range(d):
            lhs = A.involve_coords(A.multiply_coords(basis_coords[i], basis_coords[j]))
            rhs = A.multiply_coords(
                tuple(A.involve_coords(basis_coords[j])),
                tuple(A.involve_coords(basis_coords[i])),
            )
            if tuple(lhs) != tuple(rhs):
                failures.append(
                    CheckFailure(
                        "involution-antiautomorphism",
                        (i, j),
                        f"(b_i b_j)* = {tuple(lhs)} but b_j* b_i* = {tuple(rhs)}",
                    )
                )

    associative = True
    assoc_witness = None
    for i in range(d):
        for j in range(d):
            for k in range(d):
                aijk = _associator(A, basis_coords[i], basis_coords[j], basis_coords[k])
                if any(aijk):
                    associative = False
                    if assoc_witness is None:
                        assoc_witness = (i, j, k)
                ajik = _associator(A, basis_coords[j], basis_coords[i], basis_coords[k])
                if any(x + y for x, y in zip(aijk, ajik)):
                    failures.append(
                        CheckFailure(
                            "left-alternative (linearized)",
                            (i, j, k),
                            "(u,v,w) + (v,u,w) != 0",
                        )
                    )
                aikj = _associator(A, basis_coords[i], basis_coords[k], basis_coords[j])
                if any(x + y for x, y in zip(aijk, aikj)):
                    failures.append(
                        CheckFailure(
                            "right-alternative (linearized)",
                            (i, j, k),
                            "(u,v,w) + (u,w,v) != 0",
                        )
                    )

    return ValidationReport(
        algebra_name=A.name,
        valid=not failures,
        associative=associative,
        failures=tuple(failures),
        associator_witness=assoc_witness,
    )
