"""Kernel dispatch: compiled extension when importable, else pure Python.

Set ``DIMMONOID_BACKEND=python`` to force the fallback.
"""
import logging
import os

from . import _pykernels

log = logging.getLogger(__name__)

_ckernels = None
if os.environ.get("DIMMONOID_BACKEND", "").lower() != "python":
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# compiled path only for coefficients far from the int64 limit
_SMALL = 1 << 40


def _fits(rows):
    return all(abs(c) < _SMALL for r in rows for c in r)


def completion(rows, N, backend=None):
    use = backend or BACKEND
    if use == "cython" and _ckernels is not None and _fits(rows):
        try:
            return _ckernels.completion([list(r) for r in rows], N)
        except OverflowError:
            log.debug("int64 overflow in compiled completion; using Python path")
    return _pykernels.completion(rows, N)


def span_table(gens, bounds, backend=None):
    use = backend or BACKEND
    if use == "cython" and _ckernels is not None and _fits([bounds]) and _fits(gens):
        try:
            return _ckernels.span_table([list(g) for g in gens], list(bounds))
        except OverflowError:
            log.debug("int64 overflow in compiled span_table; using Python path")
    return _pykernels.span_table(gens, bounds)
