# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact integer matrix rank (fraction-free elimination).

Same Bareiss recurrence as ``_rank_py`` on C int64.  Every operand is
checked against a 2**31 guard before multiplying, so intermediate
products cannot overflow; when an entry outgrows the guard the routine
returns -1 and the caller reruns the pure big-integer twin.
"""

from libc.stdlib cimport free, malloc

DEF GUARD = 2147483648  # 2**31; products of guarded operands fit in int64


def rank_or_overflow(rows):
    """Rank of an integer matrix, or -1 when int64 headroom runs out."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef long long *a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, col, pivot_row
    cdef long long value, pivot, prev, aic
    cdef int r = 0
    try:
        for i in range(m):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                value = row[j]
                if value >= GUARD or value <= -GUARD:
                    return -1
                a[i * ncols + j] = value
        prev = 1
        for col in range(ncols):
            pivot_row = -1
            for i in range(r, m):
                if a[i * ncols + col] != 0:
                    pivot_row = i
                    break
            if pivot_row < 0:
                continue
            if pivot_row != r:
                for j in range(ncols):
                    value = a[r * ncols + j]
                    a[r * ncols + j] = a[pivot_row * ncols + j]
                    a[pivot_row * ncols + j] = value
            pivot = a[r * ncols + col]
            if pivot >= GUARD or pivot <= -GUARD:
                return -1
            for i in range(r + 1, m):
                aic = a[i * ncols + col]
                if aic >= GUARD or aic <= -GUARD:
                    return -1
                for j in range(col + 1, ncols):
                    value = a[i * ncols + j]
                    if value >= GUARD or value <= -GUARD:
                        return -1
                    value = a[r * ncols + j]
                    if value >= GUARD or value <= -GUARD:
                        return -1
                    a[i * ncols + j] = (pivot * a[i * ncols + j]
                                        - aic * value) // prev
                a[i * ncols + col] = 0
            prev = pivot
            r += 1
            if r == m:
                break
        return r
    finally:
        free(a)
