"""Backend selection for the hot kernels.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``PRYMBN_PURE_PYTHON`` (to any non-empty value) before
import forces the pure-Python fallback.  ``BACKEND`` records the choice.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

_impl = _py
if not os.environ.get("PRYMBN_PURE_PYTHON"):
    try:
        from . import _ckernels as _c  # type: ignore[attr-defined]

        _impl = _c
    except ImportError:
        pass

BACKEND: str = _impl.BACKEND

enumerate_staircase_values = _py.enumerate_staircase_values


def min_codim_staircase(r: int, k: int, gmax: int, use_budget: bool = True) -> int:
    """Minimum distinct-symbol count over displacement tableaux T_r -> [gmax]."""
    return _impl.min_codim_staircase(r, k, gmax, use_budget)


def count_linext(succ_masks: list[int]) -> int:
    """Linear-extension count; compiled table kernel up to 20 elements,
    arbitrary-precision Python beyond."""
    if _impl is not _py and len(succ_masks) <= 20:
        return _impl.count_linext(succ_masks)
    return _py.count_linext(succ_masks)
