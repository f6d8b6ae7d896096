"""ECO operator, path labels, exhaustive generation, and label dynamics.

The growth operator inserts a UD peak at the active sites of a path, so
that every path of semilength n+1 in the class is produced exactly once
from a path of semilength n.  Label dynamics reproduce the same counts
without touching any concrete path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyPath, NotInClass, UnsupportedParams
from .paths import EMPTY_PATH, ClassParams, DyckPath, is_in_class


@dataclass(frozen=True)
class EcoLabel:
    """Succession-rule label: numeric (1)..(h) or indexed (h_0)..(h_{k-3}).

    ``kind`` is "num" or "hdx"; ``index`` is l for (l) and j for (h_j).
    A path labelled (l) has exactly l children; one labelled (h_j) has h.
    """

    kind: str
    index: int

    @staticmethod
    def num(l: int) -> "EcoLabel":
        return EcoLabel("num", l)

    @staticmethod
    def hdx(j: int) -> "EcoLabel":
        return EcoLabel("hdx", j)

    def child_count(self, h: int) -> int:
        return self.index if self.kind == "num" else h

    def __str__(self) -> str:
        if self.kind == "num":
            return f"({self.index})"
        return f"(h_{self.index})"


@dataclass
class LabelVector:
    """Label multiplicities at a fixed semilength; total is the class count."""

    counts: dict[EcoLabel, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())


def _require_supported(params: ClassParams) -> None:
    if not params.eco_supported:
        raise UnsupportedParams(
            f"(h={params.h}, k={params.k}) is outside the supported range: "
            "need k=2 with h>=3, or k>=3 with h>=4"
        )


def _initial_up_run(path: DyckPath) -> int:
    t = 0
    for ch in path.word:
        if ch != "U":
            break
        t += 1
    return t


def _leading_valley_count(path: DyckPath, h: int) -> int:
    """Number of DU factors directly after the initial U^h run."""
    word = path.word
    ell = 0
    i = h
    while i + 1 < len(word) and word[i] == "D" and word[i + 1] == "U":
        ell += 1
        i += 2
    return ell


def label_of(path: DyckPath, params: ClassParams) -> EcoLabel:
    """Succession-rule label of a path in the class.

    Initial up-run of length t < h gives (t+1).  A full run t = h gives
    (h_l) where l counts the valleys at height h-1 right after the run,
    except that l = k-2 (the saturated case, the only one possible when
    k = 2) gives (h-1).
    """
    _require_supported(params)
    if not is_in_class(path, params):
        raise NotInClass(f"{path.word!r} is not in the (h={params.h}, k={params.k}) class")
    if path.semilength == 0:
        return EcoLabel.num(1)
    t = _initial_up_run(path)
    if t < params.h:
        return EcoLabel.num(t + 1)
    ell = _leading_valley_count(path, params.h)
    if ell <= params.k - 3:
        return EcoLabel.hdx(ell)
    return EcoLabel.num(params.h - 1)


def _insert_peak(path: DyckPath, pos: int) -> DyckPath:
    """Insert a UD factor before step index ``pos``."""
    n2 = 2 * path.semilength
    shift = n2 - pos
    high = path.bits >> shift
    low = path.bits & ((1 << shift) - 1)
    bits = (high << (shift + 2)) | (0b10 << shift) | low
    return DyckPath(bits, path.semilength + 1)


def children(path: DyckPath, params: ClassParams) -> list[DyckPath]:
    """Paths of semilength n+1 produced from ``path`` by the growth operator.

    Active sites sit along the initial up-run; children are emitted in
    increasing ordinate of the insertion point, so the list order is
    deterministic.  The list length always equals the label's child count.
    """
    _require_supported(params)
    if not is_in_class(path, params):
        raise NotInClass(f"{path.word!r} is not in the (h={params.h}, k={params.k}) class")
    t = _initial_up_run(path)
    if t < params.h:
        sites = range(t + 1)
    else:
        ell = _leading_valley_count(path, params.h)
        if ell <= params.k - 3:
            sites = range(params.h)
        else:  # saturated: inserting at ordinate h-1 would create a k-1 run
            sites = range(params.h - 1)
    return [_insert_peak(path, p) for p in sites]


def generate(params: ClassParams, n: int) -> list[DyckPath]:
    """All class paths of semilength n, each exactly once, sorted by word."""
    _require_supported(params)
    if n < 0:
        raise ValueError("n must be >= 0")
    level = [EMPTY_PATH]
    for _ in range(n):
        level = [child for path in level for child in children(path, params)]
    return sorted(level, key=lambda p: p.word)


def invert_first_peak(path: DyckPath) -> DyckPath:
    """Remove the leftmost UD factor; the reverse of the growth operator."""
    if path.semilength == 0:
        raise EmptyPath("the empty path has no peak to remove")
    word = path.word
    pos = word.index("UD")
    n2 = len(word)
    shift = n2 - pos - 2
    high = path.bits >> (shift + 2)
    low = path.bits & ((1 << shift) - 1)
    return DyckPath((high << shift) | low, path.semilength - 1)


def _successors(label: EcoLabel, params: ClassParams) -> list[EcoLabel]:
    """Production of one label under the succession rule for (h, k)."""
    h, k = params.h, params.k
    if label.kind == "num":
        l = label.index
        if l == 1:
            return [EcoLabel.num(2)]
        if l < h:
            return [EcoLabel.num(i) for i in range(2, l + 2)]
        # l == h
        if k >= 3:
            return [EcoLabel.num(i) for i in range(2, h + 1)] + [EcoLabel.hdx(0)]
        return (
            [EcoLabel.num(i) for i in range(2, h)]
            + [EcoLabel.num(h - 1), EcoLabel.num(h)]
        )
    j = label.index
    if j < k - 3:
        return [EcoLabel.num(i) for i in range(2, h + 1)] + [EcoLabel.hdx(j + 1)]
    return (
        [EcoLabel.num(i) for i in range(2, h)]
        + [EcoLabel.num(h - 1), EcoLabel.num(h)]
    )


def rule_counts(params: ClassParams, n: int) -> LabelVector:
    """Label multiplicities after n steps of the succession rule.

    Starts from one copy of the axiom (1); the total equals the number of
    class paths of semilength n.
    """
    _require_supported(params)
    if n < 0:
        raise ValueError("n must be >= 0")
    counts: Counter[EcoLabel] = Counter({EcoLabel.num(1): 1})
    for _ in range(n):
        nxt: Counter[EcoLabel] = Counter()
        for label, mult in counts.items():
            for succ in _successors(label, params):
                nxt[succ] += mult
        counts = nxt
    return LabelVector(dict(counts))
