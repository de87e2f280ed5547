"""Kernel backend selection.

The compiled extension (``_speedups``) is used when it was built; the
pure-Python reference is the fallback.  Set ``ALTDERIV_PURE=1`` in the
environment to force the pure backend (used by the benchmark and by the
backend-equivalence tests).
"""

import os

from . import reference

if os.environ.get("ALTDERIV_PURE"):
    _impl = reference
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = reference

BACKEND = _impl.BACKEND
echelon = _impl.echelon
kernel_absorb = _impl.kernel_absorb
matmul = _impl.matmul


def backend_name():
    """Name of the active kernel backend ("compiled" or "pure")."""
    return BACKEND
