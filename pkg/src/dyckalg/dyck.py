"""Dyck paths, their lattice order and structural features.

A path is stored as its u/d word. Heights, peaks, returns and factors are
derived lazily and cached on the (immutable) instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

MAX_ENUM_N = 14


class DyckError(ValueError):
    """Malformed Dyck word or incompatible paths."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class Peak(NamedTuple):
    x: int
    height: int


class PathFeatures(NamedTuple):
    peaks: tuple[Peak, ...]
    hills: tuple[Peak, ...]
    returns: tuple[int, ...]
    factors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DyckPath:
    word: str
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            _validate(self.word)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @cached_property
    def heights(self) -> tuple[int, ...]:
        h = [0]
        for s in self.word:
            h.append(h[-1] + (1 if s == "u" else -1))
        return tuple(h)

    @cached_property
    def features(self) -> PathFeatures:
        return features(self)

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    def __le__(self, other: DyckPath) -> bool:
        return leq(self, other)

    def __and__(self, other: DyckPath) -> DyckPath:
        return meet(self, other)

    def __or__(self, other: DyckPath) -> DyckPath:
        return join(self, other)

    def to_json(self) -> dict:
        return {"n": self.n, "word": self.word}

    @classmethod
    def from_json(cls, obj: dict) -> DyckPath:
        p = parse_word(obj["word"])
        if p.n != obj["n"]:
            raise DyckError(f"declared n={obj['n']} but word has semilength {p.n}")
        return p

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> DyckPath:
        """Build a path from a height profile h(0..2n)."""
        steps = []
        for i, (a, b) in enumerate(zip(heights, heights[1:])):
            if b - a == 1:
                steps.append("u")
            elif b - a == -1:
                steps.append("d")
            else:
                raise DyckError("height profile jumps by more than one step", i)
        return cls("".join(steps))

    @classmethod
    def bottom(cls, n: int) -> DyckPath:
        return cls("ud" * n, _checked=True)

    @classmethod
    def top(cls, n: int) -> DyckPath:
        return cls("u" * n + "d" * n, _checked=True)

    @classmethod
    def pyramid(cls, k: int) -> DyckPath:
        return cls.top(k)


def _validate(word: str) -> None:
    if not word:
        raise DyckError("empty word")
    height = 0
    for i, s in enumerate(word):
        if s == "u":
            height += 1
        elif s == "d":
            height -= 1
            if height < 0:
                raise DyckError("prefix has more d than u", i)
        else:
            raise DyckError(f"foreign character {s!r}", i)
    if len(word) % 2:
        raise DyckError(f"odd length {len(word)}", len(word))
    if height != 0:
        raise DyckError(f"unbalanced word ends at height {height}", len(word))


def parse_word(text: str) -> DyckPath:
    return DyckPath(text.strip())


def _check_same(p: DyckPath, q: DyckPath) -> None:
    if p.n != q.n:
        raise DyckError(f"semilength mismatch: {p.n} != {q.n}")


def leq(p: DyckPath, q: DyckPath) -> bool:
    """True iff p lies weakly below q."""
    _check_same(p, q)
    return all(a <= b for a, b in zip(p.heights, q.heights))


def meet(p: DyckPath, q: DyckPath) -> DyckPath:
    # equal-length profiles share parity at every abscissa, so min/max stay valid
    _check_same(p, q)
    return DyckPath.from_heights([min(a, b) for a, b in zip(p.heights, q.heights)])


def join(p: DyckPath, q: DyckPath) -> DyckPath:
    _check_same(p, q)
    return DyckPath.from_heights([max(a, b) for a, b in zip(p.heights, q.heights)])


def features(p: DyckPath) -> PathFeatures:
    h = p.heights
    w = p.word
    peaks = tuple(Peak(i + 1, h[i + 1]) for i in range(len(w) - 1) if w[i : i + 2] == "ud")
    hills = tuple(pk for pk in peaks if pk.height == 1)
    returns = tuple(x for x in range(1, len(h)) if h[x] == 0)
    starts = (0,) + returns[:-1]
    factors = tuple(zip(starts, returns))
    return PathFeatures(peaks, hills, returns, factors)


def factor_words(p: DyckPath) -> list[str]:
    return [p.word[a:b] for a, b in p.features.factors]


def is_pyramid_word(w: str) -> bool:
    k = len(w) // 2
    return w == "u" * k + "d" * k


def _generate(n: int) -> Iterator[str]:
    # depth-first with u tried before d gives lexicographic order (u < d)
    buf: list[str] = []

    def rec(ups: int, downs: int) -> Iterator[str]:
        if ups == n and downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append("u")
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("d")
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_paths(n: int) -> list[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order (u < d).

    Capped at ``MAX_ENUM_N`` (C_14 = 2,674,440 paths).
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise DyckError(f"semilength {n} outside 1..{MAX_ENUM_N}")
    return [DyckPath(w, _checked=True) for w in _generate(n)]
