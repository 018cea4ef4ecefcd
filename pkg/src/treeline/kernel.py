"""Rank-kernel selection: compiled extension when available, pure otherwise.

The backend is picked once at import time.  Set TREELINE_KERNEL=python to
force the pure big-integer kernel (used by the benchmark to compare the
two); TREELINE_KERNEL=cython makes a missing extension a hard error.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _rank_py

_requested = os.environ.get("TREELINE_KERNEL", "auto")
_rank_fast = None
if _requested in ("auto", "cython"):
    try:
        from ._rank_c import rank_or_overflow as _rank_fast
    except ImportError:
        if _requested == "cython":
            raise ImportError(
                "TREELINE_KERNEL=cython but the compiled extension is not built; "
                "run `python setup.py build_ext --inplace`"
            )

ACTIVE_BACKEND = "cython" if _rank_fast is not None else "python"


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals of an integer matrix."""
    if _rank_fast is not None:
        r = _rank_fast(rows)
        if r >= 0:
            return r
        # int64 headroom exhausted; redo exactly with big integers
    return _rank_py.rank(rows)
