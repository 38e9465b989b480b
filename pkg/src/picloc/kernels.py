"""Backend selection for the integer kernels.

The compiled extension is used when it imports and ``PICLOC_PURE`` is not
set to a true value.  ``BACKEND`` names the active one.  Compiled calls that
overflow int64 are transparently retried in Python.
"""

import os

from . import _pycore

_ccore = None
if os.environ.get("PICLOC_PURE", "").strip().lower() not in ("1", "true", "yes", "on"):
    try:
        from . import _ccore
    except ImportError:
        _ccore = None

BACKEND = "cython" if _ccore is not None else "python"


def snf(a, nrows, ncols, left=True, right=True):
    if _ccore is not None:
        try:
            return _ccore.snf(a, nrows, ncols, left, right)
        except OverflowError:
            pass
    return _pycore.snf(a, nrows, ncols, left, right)


def hnf(a, nrows, ncols):
    if _ccore is not None:
        try:
            return _ccore.hnf(a, nrows, ncols)
        except OverflowError:
            pass
    return _pycore.hnf(a, nrows, ncols)


def canonical_form(mask, n):
    if _ccore is not None:
        return _ccore.canonical_form(mask, n)
    return _pycore.canonical_form(mask, n)


def canonical_complexes(n):
    if _ccore is not None:
        return _ccore.canonical_complexes(n)
    return _pycore.canonical_complexes(n)
