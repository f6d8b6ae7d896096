"""Brute-force ground truth: exhaustive Dyck enumeration and class counting.

Deliberately shares no code with the ECO engine or the series engine; this
module is the independent oracle the other routes are checked against.
"""

from __future__ import annotations

from .errors import CapExceeded
from ._kernels import restricted_counts
from .paths import ClassParams, DyckPath, parse_path

DEFAULT_CAP = 14


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")


def enumerate_dyck(n: int, cap: int = DEFAULT_CAP) -> list[DyckPath]:
    """All unrestricted Dyck paths of semilength n, by prefix backtracking."""
    _check_cap(n, cap)
    out: list[DyckPath] = []
    word: list[str] = []

    def extend(ups: int, downs: int) -> None:
        if ups == n and downs == n:
            out.append(parse_path("".join(word)))
            return
        if ups < n:
            word.append("U")
            extend(ups + 1, downs)
            word.pop()
        if downs < ups:
            word.append("D")
            extend(ups, downs + 1)
            word.pop()

    extend(0, 0)
    return out


def brute_count(params: ClassParams, n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of class paths of semilength n, by pruned backtracking."""
    _check_cap(n, cap)
    return restricted_counts(params.h, params.k, n)[n]


def brute_counts_upto(params: ClassParams, nmax: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Class counts for every semilength 0..nmax in a single backtracking sweep."""
    _check_cap(nmax, cap)
    return restricted_counts(params.h, params.k, nmax)
