"""Exact verification engine for alternative *-algebras.

Computes Peirce decompositions, inner derivations, and the linear spaces
of additive *-derivations and additive *-Jordan n-derivations of
finite-dimensional alternative *-algebras over the rationals, entirely in
exact arithmetic, and checks that the two derivation spaces coincide on
algebras whose distinguished symmetric idempotent satisfies the required
faithfulness conditions.
"""

__version__ = "0.1.0"

from .linalg import (
    LinAlgError,
    RatMatrix,
    Rational,
    SubspaceBasis,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    rref,
    subspace_equal,
)

__all__ = [
    "LinAlgError",
    "RatMatrix",
    "Rational",
    "SubspaceBasis",
    "format_rational",
    "kernel_basis",
    "parse_rational",
    "rank",
    "rref",
    "subspace_equal",
    "__version__",
]
