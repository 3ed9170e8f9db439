"""Finite posets, their interval posets and down-set Heyting algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Iterable, Optional, Sequence

MAX_DOWNSETS = 200_000
MAX_ISO_SIZE = 2_000


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePoset:
    """Elements in a fixed order and the full (reflexive, transitive) order.

    Build through :meth:`generate` unless the relation is already closed.
    """

    elements: tuple
    relation: frozenset

    def leq(self, x, y) -> bool:
        return (x, y) in self.relation

    def lt(self, x, y) -> bool:
        return x != y and (x, y) in self.relation

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def generate(cls, elements: Iterable[Hashable], pairs: Iterable[tuple]) -> FinitePoset:
        """Reflexive-transitive closure of ``pairs``; rejects cycles."""
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate elements")
        known = set(elements)
        up: dict = {e: {e} for e in elements}
        for x, y in pairs:
            for z in (x, y):
                if z not in known:
                    raise PosetError(f"unknown element {z!r} in relation")
            up[x].add(y)
        changed = True
        while changed:
            changed = False
            for e in elements:
                reach = set().union(*(up[z] for z in up[e]))
                if reach != up[e]:
                    up[e] = reach
                    changed = True
        for x in elements:
            for y in up[x]:
                if x != y and x in up[y]:
                    raise PosetError(f"cycle through {x!r} and {y!r}: not antisymmetric")
        return cls(elements, frozenset((x, y) for x in elements for y in up[x]))

    @classmethod
    def from_leq(cls, elements: Sequence, leq: Callable[[object, object], bool]) -> FinitePoset:
        elements = tuple(elements)
        return cls(elements, frozenset((x, y) for x in elements for y in elements if leq(x, y)))

    def covers(self) -> list[tuple]:
        """Pairs (x, y) with y covering x, in element order."""
        out = []
        for x in self.elements:
            for y in self.elements:
                if self.lt(x, y) and not any(
                    self.lt(x, z) and self.lt(z, y) for z in self.elements
                ):
                    out.append((x, y))
        return out

    def minimal(self) -> list:
        return [x for x in self.elements if not any(self.lt(y, x) for y in self.elements)]

    def down(self, x) -> frozenset:
        return frozenset(y for y in self.elements if self.leq(y, x))

    def linear_extension(self) -> list:
        """Stable topological order: earliest-listed available element first."""
        remaining = list(self.elements)
        out: list = []
        placed: set = set()
        while remaining:
            for i, x in enumerate(remaining):
                if all(y in placed for y in self.elements if self.lt(y, x)):
                    out.append(x)
                    placed.add(x)
                    del remaining[i]
                    break
        return out


def parse_poset(source: str | dict) -> FinitePoset:
    """Read ``{"elements": [...], "leq": [[x, y], ...]}``; pairs are generators."""
    obj = json.loads(source) if isinstance(source, str) else source
    try:
        elements = obj["elements"]
        pairs = [tuple(p) for p in obj.get("leq", [])]
    except (KeyError, TypeError) as exc:
        raise PosetError(f"malformed poset JSON: {exc}") from None
    if any(len(p) != 2 for p in pairs):
        raise PosetError("every leq entry must be a pair")
    return FinitePoset.generate(elements, pairs)


def poset_to_json(p: FinitePoset) -> dict:
    return {"elements": list(p.elements), "leq": [list(c) for c in p.covers()]}


def chain(k: int, prefix: str = "t") -> FinitePoset:
    els = [f"{prefix}{i}" for i in range(1, k + 1)]
    return FinitePoset.generate(els, zip(els, els[1:]))


def antichain(k: int, prefix: str = "a") -> FinitePoset:
    return FinitePoset.generate([f"{prefix}{i}" for i in range(1, k + 1)], [])


def boolean_lattice(k: int) -> FinitePoset:
    """Subsets of {1..k} by inclusion, as frozensets."""
    subsets = [frozenset(i + 1 for i in range(k) if m >> i & 1) for m in range(1 << k)]
    return FinitePoset.from_leq(subsets, lambda a, b: a <= b)


@dataclass(frozen=True)
class IntervalElement:
    lo: Hashable
    hi: Hashable

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def interval_members(p: FinitePoset, iv: IntervalElement) -> frozenset:
    return frozenset(z for z in p.elements if p.leq(iv.lo, z) and p.leq(z, iv.hi))


def intervals_poset(p: FinitePoset) -> FinitePoset:
    """All intervals [x, y] with x <= y, ordered by inclusion of members."""
    ivs = [IntervalElement(x, y) for x in p.elements for y in p.elements if p.leq(x, y)]
    members = {iv: interval_members(p, iv) for iv in ivs}
    return FinitePoset.from_leq(ivs, lambda a, b: members[a] <= members[b])


@dataclass(frozen=True)
class DownSet:
    host: FinitePoset
    members: frozenset

    def __post_init__(self):
        for y in self.members:
            for x in self.host.elements:
                if self.host.leq(x, y) and x not in self.members:
                    raise PosetError(f"not down-closed: {y!r} present but {x!r} missing")

    def __le__(self, other: DownSet) -> bool:
        _same_host(self, other)
        return self.members <= other.members

    def __and__(self, other: DownSet) -> DownSet:
        _same_host(self, other)
        return DownSet(self.host, self.members & other.members)

    def __or__(self, other: DownSet) -> DownSet:
        _same_host(self, other)
        return DownSet(self.host, self.members | other.members)

    def __len__(self) -> int:
        return len(self.members)

    def label(self) -> str:
        order = {e: i for i, e in enumerate(self.host.elements)}
        return "{" + ",".join(str(e) for e in sorted(self.members, key=order.get)) + "}"


def _same_host(u: DownSet, v: DownSet) -> None:
    if u.host != v.host:
        raise PosetError("down-sets of different posets")


def ds_implies(u: DownSet, v: DownSet) -> DownSet:
    """Largest down-set w with u & w <= v."""
    _same_host(u, v)
    h = u.host
    return DownSet(
        h,
        frozenset(
            a for a in h.elements if all(b in v.members for b in h.down(a) if b in u.members)
        ),
    )


def ds_pseudo(u: DownSet) -> DownSet:
    return ds_implies(u, DownSet(u.host, frozenset()))


class DownsetLattice:
    """All down-sets of a finite poset, ordered by inclusion."""

    def __init__(self, host: FinitePoset, cap: int = MAX_DOWNSETS):
        self.host = host
        self.elements: list[DownSet] = [DownSet(host, m) for m in _downsets(host, cap)]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def bottom(self) -> DownSet:
        return DownSet(self.host, frozenset())

    @property
    def top(self) -> DownSet:
        return DownSet(self.host, frozenset(self.host.elements))

    def meet(self, u: DownSet, v: DownSet) -> DownSet:
        return u & v

    def join(self, u: DownSet, v: DownSet) -> DownSet:
        return u | v

    def leq(self, u: DownSet, v: DownSet) -> bool:
        return u <= v

    implies = staticmethod(ds_implies)
    pseudo = staticmethod(ds_pseudo)

    def as_poset(self) -> FinitePoset:
        return FinitePoset.from_leq(self.elements, lambda a, b: a.members <= b.members)


def _downsets(host: FinitePoset, cap: int) -> list[frozenset]:
    order = host.linear_extension()
    preds = {x: [y for y in host.elements if host.lt(y, x)] for x in order}
    out: list[frozenset] = []

    def rec(i: int, acc: set) -> None:
        if i == len(order):
            if len(out) >= cap:
                raise PosetError(f"more than {cap} down-sets")
            out.append(frozenset(acc))
            return
        x = order[i]
        rec(i + 1, acc)
        if all(y in acc for y in preds[x]):
            acc.add(x)
            rec(i + 1, acc)
            acc.remove(x)

    rec(0, set())
    return out


def downset_lattice(q: FinitePoset, cap: int = MAX_DOWNSETS) -> DownsetLattice:
    return DownsetLattice(q, cap)


def lattice_atoms(q: FinitePoset) -> list[DownSet]:
    """Atoms of the down-set lattice: singletons of minimal elements.

    For q = Int(P) these are the {[x, x]}, one per element of P.
    """
    return [DownSet(q, frozenset({x})) for x in q.minimal()]


# -- isomorphism ---------------------------------------------------------------


def join_irreducibles(lat: FinitePoset) -> list:
    """Elements with exactly one lower cover."""
    lower: dict = {x: 0 for x in lat.elements}
    for x, y in lat.covers():
        lower[y] += 1
    return [x for x in lat.elements if lower[x] == 1]


def _poset_isos(p: FinitePoset, q: FinitePoset, pe: Sequence, qe: Sequence):
    """Yield order isomorphisms between the subposets on ``pe`` and ``qe``."""
    if len(pe) != len(qe):
        return

    def sig(poset, els, x):
        return (
            sum(1 for y in els if poset.lt(y, x)),
            sum(1 for y in els if poset.lt(x, y)),
        )

    psig = {x: sig(p, pe, x) for x in pe}
    qsig = {y: sig(q, qe, y) for y in qe}
    if sorted(psig.values()) != sorted(qsig.values()):
        return
    order = sorted(pe, key=lambda x: psig[x])
    mapping: dict = {}
    used: set = set()

    def rec(i: int):
        if i == len(order):
            yield dict(mapping)
            return
        x = order[i]
        for y in qe:
            if y in used or qsig[y] != psig[x]:
                continue
            if all(p.leq(x, a) == q.leq(y, b) and p.leq(a, x) == q.leq(b, y) for a, b in mapping.items()):
                mapping[x] = y
                used.add(y)
                yield from rec(i + 1)
                del mapping[x]
                used.discard(y)

    yield from rec(0)


def _is_order_iso(p: FinitePoset, q: FinitePoset, m: dict) -> bool:
    if len(set(m.values())) != len(q):
        return False
    return all(p.leq(a, b) == q.leq(m[a], m[b]) for a, b in product(p.elements, repeat=2))


def is_isomorphic(l1: FinitePoset, l2: FinitePoset, cap: int = MAX_ISO_SIZE) -> Optional[dict]:
    """An order (hence lattice) isomorphism ``l1 -> l2``, or None.

    Tries the join-irreducible posets first: for distributive lattices an
    isomorphism of those extends uniquely. Falls back to a full search.
    """
    if len(l1) > cap or len(l2) > cap:
        raise PosetError(f"lattice larger than cap {cap}")
    if len(l1) != len(l2):
        return None
    j1, j2 = join_irreducibles(l1), join_irreducibles(l2)
    if len(j1) == len(j2):
        below2 = {frozenset(j for j in j2 if l2.leq(j, y)): y for y in l2.elements}
        if len(below2) == len(l2):
            for jm in _poset_isos(l1, l2, j1, j2):
                m = {}
                for x in l1.elements:
                    key = frozenset(jm[j] for j in j1 if l1.leq(j, x))
                    if key not in below2:
                        break
                    m[x] = below2[key]
                else:
                    if _is_order_iso(l1, l2, m):
                        return m
                break
    for m in _poset_isos(l1, l2, l1.elements, l2.elements):
        return m
    return None


def hasse_dot(p: FinitePoset, label: Callable[[object], str] = str, name: str = "hasse") -> str:
    """Graphviz source of the Hasse diagram; bottom elements drawn lowest."""
    ids = {x: f"n{i}" for i, x in enumerate(p.elements)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in p.elements:
        text = label(x).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {ids[x]} [label="{text}"];')
    for x, y in p.covers():
        lines.append(f"  {ids[x]} -> {ids[y]} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
