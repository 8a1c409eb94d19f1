"""Kernel backend selection.

The compiled extension (batlb._native) is preferred; the numpy fallback
(batlb._pure) is used when the extension is missing or when the
environment variable BATLB_BACKEND=pure forces it.  Both expose the same
three functions with identical exact-integer results; benchmarks/ holds a
comparison harness.
"""

from __future__ import annotations

import os

_choice = os.environ.get("BATLB_BACKEND", "").strip().lower()

if _choice == "pure":
    from . import _pure as _impl
elif _choice == "native":
    from . import _native as _impl  # type: ignore[attr-defined]
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND_NAME

moment_power_sums = _impl.moment_power_sums
brute_best = _impl.brute_best
dp_best = _impl.dp_best


def constraint_arrays(inst):
    """(mids, los, his) as 0-based contiguous int32 arrays for the kernels."""
    import numpy as np

    m = inst.m
    mids = np.empty(m, dtype=np.int32)
    los = np.empty(m, dtype=np.int32)
    his = np.empty(m, dtype=np.int32)
    for i, c in enumerate(inst.constraints):
        mids[i] = c.middle - 1
        los[i] = c.outer_lo - 1
        his[i] = c.outer_hi - 1
    return mids, los, his
