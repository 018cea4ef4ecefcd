"""Pure-Python exact integer matrix rank (fraction-free elimination).

Bareiss one-step elimination keeps every intermediate entry an exact
integer; Python's arbitrary-precision ints make the routine overflow-free
at any size.  This is the fallback twin of the compiled kernel in
``_rank_c`` and must agree with it bit for bit on every input.
"""

from __future__ import annotations

from typing import Sequence


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix."""
    m = len(rows)
    if m == 0:
        return 0
    a = [list(row) for row in rows]
    ncols = len(a[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = -1
        for i in range(r, m):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        for i in range(r + 1, m):
            aic = a[i][col]
            row_i = a[i]
            row_r = a[r]
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - aic * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        r += 1
        if r == m:
            break
    return r
