# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernel: backtracking over path prefixes.

Mirrors ``_purecount.py`` exactly; see that module for the state
description.  Counts are accumulated in C int64, which is ample for the
semilengths reachable under the enumeration cap.
"""

from libc.stdlib cimport calloc, free


cdef void _walk(long long *counts, int steps, int o, bint prev_d, int run,
                int h, int limit, int total_steps) noexcept nogil:
    cdef int new_run
    if o == 0:
        counts[steps >> 1] += 1
    if steps == total_steps or o > total_steps - steps:
        return
    if o < h:
        new_run = run + 1 if (prev_d and o == h - 1) else 0
        if new_run <= limit:
            _walk(counts, steps + 1, o + 1, 0, new_run, h, limit, total_steps)
    if o > 0:
        _walk(counts, steps + 1, o - 1, 1, run if o == h else 0,
              h, limit, total_steps)


def restricted_counts(int h, int k, int nmax):
    """Counts of class paths for every semilength 0..nmax in one sweep."""
    if nmax < 0:
        return []
    cdef long long *counts = <long long *> calloc(nmax + 1, sizeof(long long))
    if counts is NULL:
        raise MemoryError()
    try:
        with nogil:
            _walk(counts, 0, 0, 0, 0, h, k - 2, 2 * nmax)
        return [counts[i] for i in range(nmax + 1)]
    finally:
        free(counts)


def restricted_count(int h, int k, int n):
    """Number of class paths of semilength exactly n."""
    return restricted_counts(h, k, n)[n]
