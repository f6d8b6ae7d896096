"""Coefficient identities linking the class counts to Catalan numbers.

The headline result: for ceil((h+1)/2) <= n < h the Catalan numbers obey a
constant-coefficient recurrence whose weights are binomials in h alone.
The intermediate coefficient relation is checked against exact class
counts supplied by any route (series engine or brute force).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .errors import DomainViolation
from .paths import catalan


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass
class IdentityReport:
    """Outcome of an identity check over a range of n."""

    h: int
    k: int | None
    n_range: tuple[int, int]
    failures: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "h": self.h,
                "k": self.k,
                "n_range": list(self.n_range),
                "failures": [
                    {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
                    for n, lhs, rhs in self.failures
                ],
                "passed": self.passed,
            }
        )


def lhs_coefficient_relation(h: int, k: int, n: int, D: Sequence[int]) -> int:
    """Alternating binomial-weighted sum of class counts D_{n-j}.

    Terms with n - j < 0 contribute zero.  Only meaningful for n < h < k.
    """
    if not (0 <= n < h < k):
        raise DomainViolation(f"need 0 <= n < h < k, got n={n}, h={h}, k={k}")
    base = comb(h + 1, 2)
    total = 0
    for j in range((h + 1) // 2 + 1):
        if n - j < 0:
            continue
        total += D[n - j] * (-1) ** (base - j) * _binom(h + 1 - j, j)
    return total


def rhs_coefficient_relation(h: int, n: int) -> int:
    """Alternating partial row sum of Pascal's triangle matching the lhs."""
    if not 0 <= n < h:
        raise DomainViolation(f"need 0 <= n < h, got n={n}, h={h}")
    base = (h + 1) // 2
    total = 0
    for t in range(n // h, min(n, h - n + 1) + 1):
        total += (-1) ** (base - t) * _binom(h - n + 1, t)
    return total


def check_relation(
    h: int, k: int, provider: Callable[[int], int]
) -> IdentityReport:
    """Verify lhs == rhs for every 0 <= n < h with exact counts from ``provider``."""
    if not h < k:
        raise DomainViolation(f"need h < k, got h={h}, k={k}")
    D = [provider(n) for n in range(h)]
    report = IdentityReport(h=h, k=k, n_range=(0, h - 1))
    for n in range(h):
        lhs = lhs_coefficient_relation(h, k, n, D)
        rhs = rhs_coefficient_relation(h, n)
        if lhs != rhs:
            report.failures.append((n, lhs, rhs))
    return report


def catalan_recurrence_check(h: int, n: int) -> tuple[int, int]:
    """Catalan number vs its constant-coefficient recurrence value.

    C_n = sum_{j=1}^{floor((h+1)/2)} (-1)^{j+1} binom(h+1-j, j) C_{n-j},
    valid exactly on the window ceil((h+1)/2) <= n < h.  Calling outside
    the window is an error, not a silent pass.
    """
    lo = (h + 2) // 2  # ceil((h+1)/2)
    if not lo <= n < h:
        raise DomainViolation(f"need {lo} <= n < {h}, got n={n}")
    value = 0
    for j in range(1, (h + 1) // 2 + 1):
        value += (-1) ** (j + 1) * _binom(h + 1 - j, j) * catalan(n - j)
    return catalan(n), value


def pascal_alternating_sum(m: int) -> int:
    """Alternating sum of row m of Pascal's triangle: 1 for m = 0, else 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum((-1) ** t * comb(m, t) for t in range(m + 1))
