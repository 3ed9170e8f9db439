"""Antichain-of-intervals representation of Dyck paths.

A path of semilength n is the join of join-irreducibles, each one a single
pyramid among hills. The atoms lying under such a pyramid have consecutive
orders, so the path is encoded by an antichain of integer intervals of
{1, ..., n-1}. Join, meet and pseudocomplement act directly on the
antichains, and several path statistics can be read off them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .dyck import DyckError, DyckPath

Interval = tuple[int, int]


class AntichainError(ValueError):
    pass


def _maximal(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    ivs = set(intervals)
    keep = [
        (a, b)
        for (a, b) in ivs
        if not any((c <= a and b <= d) and (c, d) != (a, b) for (c, d) in ivs)
    ]
    return tuple(sorted(keep))


@dataclass(frozen=True)
class IntervalAntichain:
    """Pairwise incomparable intervals of [n-1], sorted by minimum.

    ``n`` is the semilength of the represented path.
    """

    n: int
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(tuple(iv) for iv in self.intervals))
        if self.n < 1:
            raise AntichainError(f"semilength must be positive, got {self.n}")
        for a, b in self.intervals:
            if not 1 <= a <= b <= self.n - 1:
                raise AntichainError(f"interval [{a},{b}] not inside [1,{self.n - 1}]")
        for (a, b), (c, d) in zip(self.intervals, self.intervals[1:]):
            if not (a < c and b < d):
                raise AntichainError(
                    f"intervals [{a},{b}] and [{c},{d}] are comparable or out of order"
                )

    @classmethod
    def of(cls, n: int, intervals: Iterable[Interval]) -> IntervalAntichain:
        """Build from any iterable, keeping only the maximal intervals."""
        return cls(n, _maximal(intervals))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    @property
    def cardinality(self) -> int:
        return len(self.intervals)

    @property
    def weight(self) -> int:
        """Size of the union of the intervals."""
        return len(self.support())

    def support(self) -> set[int]:
        return {i for a, b in self.intervals for i in range(a, b + 1)}

    def internal(self) -> tuple[Interval, ...]:
        """Intervals containing neither 1 nor n-1."""
        return tuple((a, b) for a, b in self.intervals if a > 1 and b < self.n - 1)

    def __str__(self) -> str:
        return "{" + ",".join(f"[{a},{b}]" for a, b in self.intervals) + "}"

    def to_json(self) -> dict:
        return {"n": self.n, "intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_json(cls, obj: dict) -> IntervalAntichain:
        return cls(obj["n"], tuple(tuple(iv) for iv in obj["intervals"]))


def join_irreducible(n: int, interval: Interval) -> DyckPath:
    """Hills everywhere except one pyramid covering the atoms of ``interval``."""
    a, b = interval
    if not 1 <= a <= b <= n - 1:
        raise DyckError(f"interval [{a},{b}] not inside [1,{n - 1}]")
    k = b - a + 2
    return DyckPath("ud" * (a - 1) + "u" * k + "d" * k + "ud" * (n - 1 - b))


def atom(n: int, i: int) -> DyckPath:
    return join_irreducible(n, (i, i))


def to_antichain(p: DyckPath) -> IntervalAntichain:
    ivs = [
        ((x - h) // 2 + 1, (x + h) // 2 - 1)
        for x, h in p.features.peaks
        if h >= 2
    ]
    return IntervalAntichain(p.n, tuple(ivs))


def from_antichain(f: IntervalAntichain) -> DyckPath:
    heights = list(DyckPath.bottom(f.n).heights)
    for a, b in f.intervals:
        jh = join_irreducible(f.n, (a, b)).heights
        heights = [max(x, y) for x, y in zip(heights, jh)]
    return DyckPath.from_heights(heights)


def _same_n(f: IntervalAntichain, g: IntervalAntichain) -> None:
    if f.n != g.n:
        raise AntichainError(f"antichains over different n: {f.n} != {g.n}")


def antichain_join(f: IntervalAntichain, g: IntervalAntichain) -> IntervalAntichain:
    _same_n(f, g)
    return IntervalAntichain.of(f.n, f.intervals + g.intervals)


def antichain_meet(f: IntervalAntichain, g: IntervalAntichain) -> IntervalAntichain:
    _same_n(f, g)
    cuts = []
    for a, b in f.intervals:
        for c, d in g.intervals:
            lo, hi = max(a, c), min(b, d)
            if lo <= hi:
                cuts.append((lo, hi))
    return IntervalAntichain.of(f.n, cuts)


def antichain_leq(f: IntervalAntichain, g: IntervalAntichain) -> bool:
    _same_n(f, g)
    return all(any(c <= a and b <= d for c, d in g.intervals) for a, b in f.intervals)


def runs(elements: Iterable[int]) -> list[Interval]:
    """Split a set of integers into maximal runs of consecutive values."""
    out: list[Interval] = []
    for x in sorted(elements):
        if out and out[-1][1] == x - 1:
            out[-1] = (out[-1][0], x)
        else:
            out.append((x, x))
    return out


def antichain_neg(f: IntervalAntichain) -> IntervalAntichain:
    rest = set(range(1, f.n)) - f.support()
    return IntervalAntichain(f.n, tuple(runs(rest)))


def all_antichains(n: int) -> list[IntervalAntichain]:
    """Every antichain of intervals of [n-1], grown left to right.

    Consecutive intervals need strictly increasing minima and maxima, so the
    search extends a partial antichain by intervals starting after the last
    minimum and ending after the last maximum.
    """
    m = n - 1
    out: list[IntervalAntichain] = []

    def rec(acc: list[Interval], lo: int, hi: int) -> None:
        out.append(IntervalAntichain(n, tuple(acc)))
        for a in range(lo + 1, m + 1):
            for b in range(max(a, hi + 1), m + 1):
                acc.append((a, b))
                rec(acc, a, b)
                acc.pop()

    rec([], 0, 0)
    return out


class StatsRecord(NamedTuple):
    peak_count: int
    hill_count: int
    peak_height_sum: int
    return_count: int
    first_peak_height: int
    peaks_before_first_return: int
    duu_count: int


class FormulaStats(NamedTuple):
    """Statistics read from the antichain.

    ``peak_height_sum`` is the corrected count; ``peak_height_sum_closed``
    is the closed form (n-1) + |F| - |G*|, which drops the overlap of
    intersecting intervals and so undercounts on paths whose peaks share atoms.
    """

    peak_count: int
    hill_count: int
    peak_height_sum: int
    peak_height_sum_closed: int
    return_count: int
    first_peak_height: int
    peaks_before_first_return: int
    duu_count: int

    def record(self) -> StatsRecord:
        return StatsRecord(
            self.peak_count,
            self.hill_count,
            self.peak_height_sum,
            self.return_count,
            self.first_peak_height,
            self.peaks_before_first_return,
            self.duu_count,
        )


STAT_NAMES = StatsRecord._fields


def stats_geometric(p: DyckPath) -> StatsRecord:
    feats = p.features
    peaks = feats.peaks
    first_return = feats.returns[0]
    return StatsRecord(
        peak_count=len(peaks),
        hill_count=len(feats.hills),
        peak_height_sum=sum(h for _, h in peaks),
        return_count=len(feats.returns),
        first_peak_height=peaks[0].height,
        peaks_before_first_return=sum(1 for x, _ in peaks if x < first_return),
        duu_count=sum(1 for i in range(len(p.word) - 2) if p.word[i : i + 3] == "duu"),
    )


def distanced(i1: Interval, i2: Interval) -> bool:
    return i1[1] < i2[0] - 1


def stats_formula(f: IntervalAntichain) -> FormulaStats:
    g = antichain_neg(f)
    ivs = f.intervals
    n = f.n
    hills = g.weight - len(g.internal())
    heights_closed = (n - 1) + len(f) - len(g.internal())
    # the bottom path's single run of hills touches both ends, one more hill
    # than the run-to-interval count gives
    hills_exact = hills + (1 if not ivs else 0)
    heights = sum(b - a + 1 for a, b in ivs) + len(f) + hills_exact

    starts_high = bool(ivs) and ivs[0][0] == 1
    first_peak = ivs[0][1] - ivs[0][0] + 2 if starts_high else 1
    if starts_high:
        k = 1
        while k < len(ivs) and not distanced(ivs[k - 1], ivs[k]):
            k += 1
        before_return = k
    else:
        before_return = 1

    duu = 1 if ivs and ivs[0][0] >= 2 else 0
    for prev, cur in zip(ivs, ivs[1:]):
        if distanced(prev, cur) or cur[1] - max(prev[1], cur[0] - 1) > 1:
            duu += 1

    return FormulaStats(
        peak_count=len(f) + hills,
        hill_count=hills,
        peak_height_sum=heights,
        peak_height_sum_closed=heights_closed,
        return_count=g.weight + 1,
        first_peak_height=first_peak,
        peaks_before_first_return=before_return,
        duu_count=duu,
    )
