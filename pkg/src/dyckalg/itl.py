"""Propositional logic of subintervals over a finite chain t_1 < ... < t_n.

Formulas are evaluated to valuations: the set of intervals [lo, hi] of the
chain on which they hold. Box and diamond quantify over subintervals; the
pseudo connectives ``~`` and ``~>`` are box-guarded negation and implication.

Concrete syntax::

    atom    := T | F | e<k> | E[a,b] | ( formula )
    unary   := (! | ~ | [] | <>)* atom
    conj    := unary (& conj)?
    disj    := conj (| disj)?
    formula := disj ((-> | ~>) formula)?

``E[a,b]`` abbreviates ``~~(ea | ... | eb)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Optional, Union

from .birkhoff import IntervalAntichain, from_antichain, to_antichain
from .dyck import DyckPath


class FormulaError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# -- syntax ------------------------------------------------------------------


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class PseudoNot:
    arg: "Formula"


@dataclass(frozen=True)
class Box:
    arg: "Formula"


@dataclass(frozen=True)
class Diamond:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class PseudoImplies:
    left: "Formula"
    right: "Formula"


Formula = Union[Bottom, Top, Var, Not, PseudoNot, Box, Diamond, And, Or, Implies, PseudoImplies]

_UNARY = {"!": Not, "~": PseudoNot, "[]": Box, "<>": Diamond}
_BINARY_SYM = {And: "&", Or: "|", Implies: "->", PseudoImplies: "~>"}
_UNARY_SYM = {Not: "!", PseudoNot: "~", Box: "[]", Diamond: "<>"}


def disjunction(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction; the empty disjunction is Bottom."""
    parts = list(parts)
    if not parts:
        return Bottom()
    return reduce(lambda acc, f: Or(f, acc), reversed(parts[:-1]), parts[-1])


def eps(a: int, b: int) -> Formula:
    """The closed interval proposition ~~(e_a | ... | e_b)."""
    if not 1 <= a <= b:
        raise FormulaError(f"bad interval E[{a},{b}]")
    return PseudoNot(PseudoNot(disjunction(Var(i) for i in range(a, b + 1))))


def _as_eps(f: Formula) -> Optional[tuple[int, int]]:
    if not (isinstance(f, PseudoNot) and isinstance(f.arg, PseudoNot)):
        return None
    idx = []
    g = f.arg.arg
    while isinstance(g, Or) and isinstance(g.left, Var):
        idx.append(g.left.index)
        g = g.right
    if not isinstance(g, Var):
        return None
    idx.append(g.index)
    if idx != list(range(idx[0], idx[0] + len(idx))):
        return None
    return idx[0], idx[-1]


_PREC = {Implies: 1, PseudoImplies: 1, Or: 2, And: 3}


def to_text(f: Formula) -> str:
    """Render in the concrete syntax; parses back to an equal tree."""

    def go(f: Formula, ctx: int) -> str:
        if isinstance(f, Bottom):
            return "F"
        if isinstance(f, Top):
            return "T"
        if isinstance(f, Var):
            return f"e{f.index}"
        span = _as_eps(f)
        if span:
            return f"E[{span[0]},{span[1]}]"
        if type(f) in _UNARY_SYM:
            return _UNARY_SYM[type(f)] + go(f.arg, 4)
        prec = _PREC[type(f)]
        # all binary connectives associate to the right
        s = f"{go(f.left, prec + 1)} {_BINARY_SYM[type(f)]} {go(f.right, prec)}"
        return f"({s})" if prec < ctx else s

    return go(f, 0)


_TOKEN = re.compile(
    r"\s*(?:(?P<eps>E\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\])|(?P<var>e(?P<k>\d+))"
    r"|(?P<op>~>|->|\[\]|<>|[TF!~&|()]))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        if m.group("eps"):
            a, b = int(m.group("a")), int(m.group("b"))
            if a == 0:
                raise FormulaError("variable index 0", start)
            if a > b:
                raise FormulaError(f"empty interval E[{a},{b}]", start)
            toks.append(("eps", (a, b), start))
        elif m.group("var"):
            k = int(m.group("k"))
            if k == 0:
                raise FormulaError("variable index 0", start)
            toks.append(("var", k, start))
        else:
            toks.append((m.group("op"), None, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, _, pos = self.toks[self.i]
        found = "end of input" if kind == "end" else repr(kind)
        raise FormulaError(f"expected {what}, found {found}", pos)

    def formula(self) -> Formula:
        left = self.disj()
        if self.peek() in ("->", "~>"):
            op = self.take()[0]
            right = self.formula()
            return Implies(left, right) if op == "->" else PseudoImplies(left, right)
        return left

    def disj(self) -> Formula:
        left = self.conj()
        if self.peek() == "|":
            self.take()
            return Or(left, self.disj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        if self.peek() == "&":
            self.take()
            return And(left, self.conj())
        return left

    def unary(self) -> Formula:
        if self.peek() in _UNARY:
            return _UNARY[self.take()[0]](self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, val, _ = self.toks[self.i]
        if kind == "T":
            self.take()
            return Top()
        if kind == "F":
            self.take()
            return Bottom()
        if kind == "var":
            self.take()
            return Var(val)
        if kind == "eps":
            self.take()
            return eps(*val)
        if kind == "(":
            self.take()
            f = self.formula()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return f
        self.fail("a formula")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "end":
        p.fail("end of input")
    return f


# -- semantics ---------------------------------------------------------------

IntervalId = tuple[int, int]


def chain_intervals(n: int) -> list[IntervalId]:
    """All intervals [lo, hi] of the n-chain, ordered by (lo, hi)."""
    return [(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1)]


def subintervals(iv: IntervalId) -> Iterator[IntervalId]:
    lo, hi = iv
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            yield (a, b)


@dataclass(frozen=True)
class Valuation:
    n: int
    true_on: frozenset

    def __call__(self, iv: IntervalId) -> bool:
        return iv in self.true_on

    def __le__(self, other: Valuation) -> bool:
        return self.true_on <= other.true_on

    def sorted(self) -> list[IntervalId]:
        return sorted(self.true_on)

    def maximal(self) -> list[IntervalId]:
        """Maximal true intervals, by increasing minimum."""
        return [
            (a, b)
            for a, b in self.sorted()
            if not any(c <= a and b <= d and (c, d) != (a, b) for c, d in self.true_on)
        ]

    def to_json(self) -> dict:
        return {"n": self.n, "true_on": [list(iv) for iv in self.sorted()]}

    @classmethod
    def from_json(cls, obj: dict) -> Valuation:
        return cls(obj["n"], frozenset(tuple(iv) for iv in obj["true_on"]))


def max_var(f: Formula) -> int:
    if isinstance(f, Var):
        return f.index
    if isinstance(f, (Bottom, Top)):
        return 0
    if hasattr(f, "arg"):
        return max_var(f.arg)
    return max(max_var(f.left), max_var(f.right))


def evaluate(f: Formula, n: int) -> Valuation:
    if n < 1:
        raise FormulaError(f"chain order must be positive, got {n}")
    if max_var(f) > n:
        raise FormulaError(f"variable e{max_var(f)} exceeds chain order {n}")
    ivs = chain_intervals(n)
    subs = {iv: list(subintervals(iv)) for iv in ivs}
    cache: dict[int, frozenset] = {}

    def ev(g: Formula) -> frozenset:
        key = id(g)
        if key in cache:
            return cache[key]
        if isinstance(g, Top):
            r = frozenset(ivs)
        elif isinstance(g, Bottom):
            r = frozenset()
        elif isinstance(g, Var):
            r = frozenset({(g.index, g.index)})
        elif isinstance(g, Not):
            r = frozenset(ivs) - ev(g.arg)
        elif isinstance(g, And):
            r = ev(g.left) & ev(g.right)
        elif isinstance(g, Or):
            r = ev(g.left) | ev(g.right)
        elif isinstance(g, Implies):
            r = (frozenset(ivs) - ev(g.left)) | ev(g.right)
        elif isinstance(g, Box):
            t = ev(g.arg)
            r = frozenset(iv for iv in ivs if all(j in t for j in subs[iv]))
        elif isinstance(g, Diamond):
            t = ev(g.arg)
            r = frozenset(iv for iv in ivs if any(j in t for j in subs[iv]))
        elif isinstance(g, PseudoNot):
            t = ev(g.arg)
            r = frozenset(iv for iv in ivs if not any(j in t for j in subs[iv]))
        elif isinstance(g, PseudoImplies):
            a, b = ev(g.left), ev(g.right)
            r = frozenset(iv for iv in ivs if all(j not in a or j in b for j in subs[iv]))
        else:
            raise TypeError(f"not a formula: {g!r}")
        cache[key] = r
        return r

    return Valuation(n, ev(f))


def is_valid(f: Formula, n: int) -> bool:
    return len(evaluate(f, n).true_on) == n * (n + 1) // 2


def theta_witness(f: Formula, n: int) -> Optional[tuple[IntervalId, IntervalId]]:
    """A pair (I, J) with J inside I, f true on I and false on J, or None."""
    v = evaluate(f, n)
    for iv in chain_intervals(n):
        if iv in v.true_on:
            for j in subintervals(iv):
                if j not in v.true_on:
                    return iv, j
    return None


def in_theta(f: Formula, n: int) -> bool:
    """True iff f -> []f is valid, i.e. f is preserved under subintervals."""
    return theta_witness(f, n) is None


def equivalent(f: Formula, g: Formula, n: int) -> bool:
    return evaluate(f, n) == evaluate(g, n)


class NotInThetaError(FormulaError):
    pass


def _require_theta(f: Formula, n: int) -> Valuation:
    w = theta_witness(f, n)
    if w:
        raise NotInThetaError(
            f"{to_text(f)} is not preserved under subintervals: true on {list(w[0])}, "
            f"false on {list(w[1])}"
        )
    return evaluate(f, n)


def cdf_intervals(f: Formula, n: int) -> list[IntervalId]:
    return _require_theta(f, n).maximal()


def cdf_from_intervals(intervals: Iterable[IntervalId]) -> Formula:
    return disjunction(eps(a, b) for a, b in sorted(intervals))


def cdf(f: Formula, n: int) -> Formula:
    """Closed disjunctive form: the disjunction of E[I] over the maximal
    intervals where f holds, by increasing minimum."""
    return cdf_from_intervals(cdf_intervals(f, n))


def theta_to_dyck(f: Formula, n: int) -> DyckPath:
    """Image of f (over the n-chain) in the Dyck algebra of semilength n+1."""
    return from_antichain(IntervalAntichain(n + 1, tuple(cdf_intervals(f, n))))


def dyck_to_theta(p: DyckPath) -> Formula:
    return cdf_from_intervals(to_antichain(p).intervals)


def antichain_formula(f: IntervalAntichain) -> Formula:
    return cdf_from_intervals(f.intervals)
