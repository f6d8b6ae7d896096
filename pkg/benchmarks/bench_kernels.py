#!/usr/bin/env python3
"""Compare the compiled counting kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--nmax N] [--repeat R]
"""

import argparse
import time

from valleyforge import _purecount
from valleyforge._kernels import KERNEL


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--nmax", type=int, default=13)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    try:
        from valleyforge import _fastcount
    except ImportError:
        _fastcount = None

    cells = [(4, 3), (5, 4), (7, 5), (6, 2)]
    print(f"active kernel: {KERNEL}")
    print(f"{'cell':>10} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for h, k in cells:
        t_pure, counts_pure = _time(
            lambda: _purecount.restricted_counts(h, k, args.nmax), args.repeat
        )
        if _fastcount is None:
            print(f"  (h={h},k={k}) {t_pure:10.3f}  compiled kernel unavailable")
            continue
        t_fast, counts_fast = _time(
            lambda: _fastcount.restricted_counts(h, k, args.nmax), args.repeat
        )
        assert counts_pure == counts_fast, f"kernel disagreement at (h={h}, k={k})"
        print(f"  (h={h},k={k}) {t_pure:10.3f} {t_fast:13.4f} {t_pure / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
