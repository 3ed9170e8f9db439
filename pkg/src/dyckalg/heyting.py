"""Relative pseudocomplement, pseudocomplement and regular elements of the
Dyck algebra, computed from the geometry of the paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dyck import DyckError, DyckPath, _check_same, is_pyramid_word


@dataclass(frozen=True)
class CrossingSet:
    abscissas: tuple[int, ...]

    def __post_init__(self):
        xs = self.abscissas
        if len(xs) < 2 or xs[0] != 0 or len(xs) % 2:
            raise ValueError(f"malformed crossing set {xs}")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError(f"crossing set not strictly increasing: {xs}")

    def segments(self) -> list[tuple[int, int]]:
        xs = self.abscissas
        return list(zip(xs, xs[1:]))

    def to_json(self) -> dict:
        return {"abscissas": list(self.abscissas)}

    @classmethod
    def from_json(cls, obj: dict) -> CrossingSet:
        return cls(tuple(obj["abscissas"]))


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "".join(map(str, self.parts)) if max(self.parts) < 10 else ",".join(map(str, self.parts))

    def to_json(self) -> dict:
        return {"n": self.n, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj: dict) -> Composition:
        c = cls(tuple(obj["parts"]))
        if c.n != obj["n"]:
            raise ValueError(f"parts sum to {c.n}, declared n={obj['n']}")
        return c


def crossing_set(p: DyckPath, q: DyckPath) -> CrossingSet:
    """Abscissas where p and q meet and cross in the pattern that bounds a
    region with p weakly below q, plus the endpoints 0 and 2n.

    Not symmetric: ``crossing_set(p, q) != crossing_set(q, p)`` in general.
    """
    _check_same(p, q)
    hp, hq, wp, wq = p.heights, q.heights, p.word, q.word
    end = len(wp)
    xs = [0]
    for x in range(1, end):
        if hp[x] != hq[x]:
            continue
        leaves = wp[x] == "u" and wq[x] == "d"
        arrives = wp[x - 1] == "d" and wq[x - 1] == "u"
        # both at once means p touches q from above without crossing
        if leaves != arrives:
            xs.append(x)
    xs.append(end)
    return CrossingSet(tuple(xs))


def _updown(h_start: int, h_end: int, length: int) -> str:
    # alpha - beta = h_end - h_start, alpha + beta = length
    alpha = (length + h_end - h_start) // 2
    return "u" * alpha + "d" * (length - alpha)


def rel_pseudocomplement(p: DyckPath, q: DyckPath) -> DyckPath:
    """p ~> q: q with every stretch where p lies weakly below it raised to the
    highest possible u^a d^b shape."""
    cs = crossing_set(p, q)
    hq = q.heights
    out = []
    for i, (a, b) in enumerate(cs.segments()):
        if i % 2 == 0:
            out.append(_updown(hq[a], hq[b], b - a))
        else:
            out.append(q.word[a:b])
    return DyckPath("".join(out))


def _hill_runs(p: DyckPath) -> list[tuple[int, int]]:
    """Maximal runs of consecutive hills as (start, end) abscissas.

    Also includes the empty runs ``(x, x)`` at returns sitting between two
    nontrivial factors.
    """
    runs = []
    current = None
    factors = p.features.factors
    for k, (a, b) in enumerate(factors):
        if b - a == 2:
            current = (current[0], b) if current else (a, b)
            continue
        if current:
            runs.append(current)
            current = None
        elif k > 0 and factors[k - 1][1] - factors[k - 1][0] > 2:
            runs.append((a, a))
    if current:
        runs.append(current)
    return runs


def pseudocomplement(p: DyckPath) -> DyckPath:
    """~p: each run of hills becomes a pyramid overhanging it by one step on
    each side (clipped at the ends); everything else becomes hills."""
    end = len(p.word)
    out = []
    pos = 0
    for x, x2 in _hill_runs(p):
        a, b = max(0, x - 2), min(x2 + 2, end)
        out.append("ud" * ((a - pos) // 2))
        out.append("u" * ((b - a) // 2) + "d" * ((b - a) // 2))
        pos = b
    out.append("ud" * ((end - pos) // 2))
    return DyckPath("".join(out))


def closure(p: DyckPath) -> DyckPath:
    """~~p, obtained by raising each factor to the pyramid of the same length."""
    return DyckPath(
        "".join("u" * ((b - a) // 2) + "d" * ((b - a) // 2) for a, b in p.features.factors)
    )


def is_regular(p: DyckPath) -> bool:
    return all(is_pyramid_word(p.word[a:b]) for a, b in p.features.factors)


def regular_to_composition(p: DyckPath) -> Composition:
    if not is_regular(p):
        raise DyckError(f"{p.word} is not regular (some factor is not a pyramid)")
    return Composition(tuple((b - a) // 2 for a, b in p.features.factors))


def composition_to_regular(c: Composition | Sequence[int]) -> DyckPath:
    parts = c.parts if isinstance(c, Composition) else Composition(tuple(c)).parts
    return DyckPath("".join("u" * k + "d" * k for k in parts))


def refinement_covers(lo: Composition, hi: Composition) -> bool:
    """True iff ``hi`` comes from ``lo`` by adding two adjacent parts."""
    if lo.n != hi.n:
        raise ValueError(f"compositions of different totals {lo.n} and {hi.n}")
    a, b = lo.parts, hi.parts
    if len(a) != len(b) + 1:
        return False
    return any(a[:i] + (a[i] + a[i + 1],) + a[i + 2 :] == b for i in range(len(a) - 1))


def compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, via subsets of the n-1 cut points."""
    out = []
    for mask in range(1 << (n - 1)):
        cuts = [i + 1 for i in range(n - 1) if mask >> i & 1]
        bounds = [0, *cuts, n]
        out.append(Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return out


def regular_elements(n: int) -> list[DyckPath]:
    return [composition_to_regular(c) for c in compositions(n)]
