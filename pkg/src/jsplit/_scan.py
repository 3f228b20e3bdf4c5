"""Backend selection for the quartic identity scans.

The compiled Cython kernel is used when it imported successfully, the caller
did not force the pure path (env ``JSPLIT_PURE_SCAN=1``), and the
denominator-cleared constants are small enough that the int64 accumulator
provably cannot overflow.  Otherwise the pure-Python backend runs the same
algorithm with unbounded integers.
"""

from __future__ import annotations

import os
from math import lcm

from . import _scan_py

try:
    from . import _scan_cy
    HAVE_COMPILED = True
except ImportError:
    _scan_cy = None
    HAVE_COMPILED = False

# A quadruple accumulates six terms, each a sum of at most s^2 triple products
# of scaled constants bounded by C, so |acc| <= 6 * s^2 * C^3.
_INT64_BUDGET = 2 ** 62


def active_backend() -> str:
    if HAVE_COMPILED and os.environ.get("JSPLIT_PURE_SCAN") != "1":
        return "compiled"
    return "pure"


def _scaled_rows(rows_flat):
    """Clear denominators globally; returns (int rows, max |value|, max nnz)."""
    denom = 1
    for row in rows_flat:
        for _, v in row:
            denom = lcm(denom, v.denominator)
    int_rows = []
    cmax = 0
    smax = 0
    for row in rows_flat:
        irow = []
        for k, v in row:
            iv = v.numerator * (denom // v.denominator)
            irow.append((k, iv))
            if abs(iv) > cmax:
                cmax = abs(iv)
        int_rows.append(irow)
        if len(irow) > smax:
            smax = len(irow)
    return int_rows, cmax, smax


def jordan_scan(rows_flat, dim, parity, plain=False, slots=None, backend="auto"):
    """All quadruples (from ``slots``, default the full basis) violating the
    degree-4 identity; see ``_scan_py.scan`` for the exact identity checked."""
    if slots is None:
        full = list(range(dim))
        slots = (full, full, full, full)
    int_rows, cmax, smax = _scaled_rows(rows_flat)
    if backend == "auto":
        backend = active_backend()
        if backend == "compiled" and not _fits_int64(cmax, smax):
            backend = "pure"
    elif backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled scan backend is not available")
        if not _fits_int64(cmax, smax):
            raise RuntimeError("constants too large for the compiled backend")
    elif backend != "pure":
        raise ValueError(f"unknown backend {backend!r}")

    if backend == "compiled":
        return _scan_compiled(int_rows, dim, parity, slots, plain)
    return _scan_py.scan(int_rows, dim, parity, slots, plain)


def _fits_int64(cmax, smax) -> bool:
    return 6 * smax * smax * cmax ** 3 < _INT64_BUDGET


def _scan_compiled(int_rows, dim, parity, slots, plain):
    import numpy as np

    indptr = np.zeros(dim * dim + 1, dtype=np.int64)
    cols = []
    vals = []
    for idx, row in enumerate(int_rows):
        for k, v in row:
            cols.append(k)
            vals.append(v)
        indptr[idx + 1] = len(cols)
    cols_arr = np.asarray(cols, dtype=np.intc)
    vals_arr = np.asarray(vals, dtype=np.int64)
    par = np.asarray(parity, dtype=np.int8)
    slot_arrs = [np.asarray(list(s), dtype=np.intc) for s in slots]
    return _scan_cy.scan(indptr, cols_arr, vals_arr, dim, par,
                         slot_arrs[0], slot_arrs[1], slot_arrs[2],
                         slot_arrs[3], plain)
