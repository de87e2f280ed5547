"""Exact rational linear algebra: matrices, RREF, kernels, subspaces.

The engine's only scalar type is the arbitrary-precision rational
(``fractions.Fraction``, re-exported as ``Rational``).  No floating point
appears anywhere.  Subspaces are identified by their unique reduced
row-echelon basis, so equality and containment are exact comparisons.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from . import _kernels

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class LinAlgError(ValueError):
    """Raised for shape mismatches and malformed rational input."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optional leading sign) into an exact rational."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise LinAlgError(f"malformed rational {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise LinAlgError(f"malformed rational {text!r} (zero denominator)") from None


def format_rational(q: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(q)


def _as_fraction_row(row):
    return [x if isinstance(x, Fraction) else Fraction(x) for x in row]


def _int_row(row):
    """Scale a rational row to a primitive integer row (kernel/row space safe)."""
    den = lcm(*(x.denominator for x in row)) if row else 1
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        ints = [x // g for x in ints]
    return ints


class RatMatrix:
    """Dense matrix of rationals, stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(_as_fraction_row(row)) for row in data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.cols:
                raise LinAlgError("ragged matrix rows")
        self.data = data

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        zero = Fraction(0)
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns):
        return cls(columns).transpose()

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self):
        return RatMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other):
        self._check_same_shape(other)
        return RatMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return RatMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self):
        return RatMatrix([[-a for a in row] for row in self.data])

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise LinAlgError(f"matmul shape mismatch {self.shape} x {other.shape}")
            bt = other.transpose().data
            return RatMatrix(
                [[_dot(row, col) for col in bt] for row in self.data]
            )
        return NotImplemented

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of rationals."""
        if len(vec) != self.cols:
            raise LinAlgError("vector length does not match matrix columns")
        return tuple(_dot(row, vec) for row in self.data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


def _dot(a, b):
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def rref(m: RatMatrix) -> RatMatrix:
    """Unique reduced row-echelon form; the row space is preserved.

    Zero rows sink to the bottom so the output has the same shape as the
    input.  An empty matrix is returned unchanged.
    """
    if m.rows == 0 or m.cols == 0:
        return m
    int_rows = [_int_row(row) for row in m.data]
    pivots, erows = _kernels.echelon(int_rows, m.cols)
    out = []
    for p, row in zip(pivots, erows):
        pv = Fraction(row[p])
        out.append([Fraction(x) / pv for x in row])
    zero = [Fraction(0)] * m.cols
    while len(out) < m.rows:
        out.append(zero[:])
    return RatMatrix(out)


def rank(m: RatMatrix) -> int:
    """Rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    int_rows = [_int_row(row) for row in m.data]
    pivots, _ = _kernels.echelon(int_rows, m.cols)
    return len(pivots)


class SubspaceBasis:
    """Canonical basis (RREF rows) of a linear subspace of Q^ambient_dim.

    Two SubspaceBasis values are equal exactly when they span the same
    subspace, because the RREF basis of a subspace is unique.
    """

    __slots__ = ("ambient_dim", "vectors")

    def __init__(self, ambient_dim, vectors, _canonical=False):
        if _canonical:
            self.ambient_dim = ambient_dim
            self.vectors = vectors
            return
        vecs = [list(_as_fraction_row(v)) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise LinAlgError("vector length does not match ambient dimension")
        int_rows = [_int_row(v) for v in vecs]
        pivots, erows = _kernels.echelon(int_rows, ambient_dim)
        canon = []
        for p, row in zip(pivots, erows):
            pv = Fraction(row[p])
            canon.append(tuple(Fraction(x) / pv for x in row))
        self.ambient_dim = ambient_dim
        self.vectors = tuple(canon)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def contains_vector(self, vec) -> bool:
        """Exact membership test by reduction against the canonical basis."""
        v = list(_as_fraction_row(vec))
        if len(v) != self.ambient_dim:
            raise LinAlgError("vector length does not match ambient dimension")
        for row in self.vectors:
            p = next(i for i, x in enumerate(row) if x)
            c = v[p]
            if c:
                for i in range(p, self.ambient_dim):
                    if row[i]:
                        v[i] -= c * row[i]
        return all(x == 0 for x in v)

    def contains(self, other: "SubspaceBasis") -> bool:
        """True iff span(other) is a subspace of span(self)."""
        if self.ambient_dim != other.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        return all(self.contains_vector(v) for v in other.vectors)

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    """True iff the two bases span the same subspace (canonical comparison)."""
    if a.ambient_dim != b.ambient_dim:
        raise LinAlgError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}"
        )
    return a.vectors == b.vectors


def kernel_basis(m: RatMatrix) -> SubspaceBasis:
    """Canonical basis of {v : m.v = 0}; dimension is cols - rank."""
    n = m.cols
    sparse = []
    for row in m.data:
        ints = _int_row(row)
        idx = [i for i, x in enumerate(ints) if x]
        if idx:
            sparse.append((idx, [ints[i] for i in idx]))
    cols = _kernels.kernel_absorb(n, sparse)
    return SubspaceBasis(n, cols)


def kernel_of_sparse_rows(n, sparse_rows) -> SubspaceBasis:
    """Kernel of a stream of sparse integer rows ((indices, values) pairs)."""
    cols = _kernels.kernel_absorb(n, sparse_rows)
    return SubspaceBasis(n, cols)
