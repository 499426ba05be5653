"""Dispatch between the compiled and the pure-Python integer kernels.

The compiled extension is picked at import when it was built; otherwise the
pure-Python module is used (also when DEDEKINDSUMS_PURE_PYTHON=1). Even with the extension present, calls whose
values could overflow 64 bits are routed to Python's big integers, so results
never depend on the backend.
"""

import os
from math import comb

from . import _pykernels

_ckernels = None
if os.environ.get("DEDEKINDSUMS_PURE_PYTHON") != "1":
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass

BACKEND = "cython" if _ckernels is not None else "python"

_I64_SAFE = 1 << 62


def available_backends():
    """Names of the backends importable in this environment."""
    return ["python", "cython"] if _ckernels is not None else ["python"]


def backend_module(name):
    """Return the raw kernel module for ``name`` (used by tests and benchmarks)."""
    if name == "python":
        return _pykernels
    if name == "cython" and _ckernels is not None:
        return _ckernels
    raise LookupError(f"kernel backend {name!r} is not available")


def cyclic_convolve(u, v):
    m = len(u)
    if _ckernels is not None and m:
        bound = max(map(abs, u)) * max(map(abs, v)) * m
        if bound < _I64_SAFE:
            return _ckernels.cyclic_convolve(u, v)
    return _pykernels.cyclic_convolve(u, v)


def dedekind_numerator(a, b):
    # |sum| <= b * b^2
    if _ckernels is not None and b < (1 << 20):
        return _ckernels.dedekind_numerator(a % b, b)
    return _pykernels.dedekind_numerator(a, b)


def partition_table(parts, n):
    # every count is bounded by the number of (k_0..k_d) with sum(k) <= n
    if _ckernels is not None and comb(n + len(parts), len(parts)) < _I64_SAFE:
        return _ckernels.partition_table(parts, n)
    return _pykernels.partition_table(parts, n)
