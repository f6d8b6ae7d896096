"""Pure-Python counting kernel: backtracking over path prefixes.

Same algorithm as the compiled kernel in ``_fastcount.pyx``: a depth-first
walk of the prefix tree, pruning on the height bound and on the running
count of consecutive valleys at height h-1.  Kept dependency-free so it can
stand in whenever the extension is unavailable.
"""

from __future__ import annotations

import sys


def restricted_counts(h: int, k: int, nmax: int) -> list[int]:
    """Counts of class paths for every semilength 0..nmax in one sweep.

    State per node: ordinate ``o``, whether the last step was a D
    (``prev_d``), and ``run`` = number of adjacent DU factors at height h-1
    ending at the current position (carried through a trailing D).
    """
    counts = [0] * (nmax + 1)
    if nmax < 0:
        return counts
    total_steps = 2 * nmax
    limit = k - 2

    def walk(steps: int, o: int, prev_d: bool, run: int) -> None:
        if o == 0:
            counts[steps // 2] += 1
        if steps == total_steps or o > total_steps - steps:
            return
        if o < h:
            new_run = run + 1 if (prev_d and o == h - 1) else 0
            if new_run <= limit:
                walk(steps + 1, o + 1, False, new_run)
        if o > 0:
            walk(steps + 1, o - 1, True, run if o == h else 0)

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, total_steps + 100))
    try:
        walk(0, 0, False, 0)
    finally:
        sys.setrecursionlimit(old)
    return counts


def restricted_count(h: int, k: int, n: int) -> int:
    """Number of class paths of semilength exactly n."""
    return restricted_counts(h, k, n)[n]
