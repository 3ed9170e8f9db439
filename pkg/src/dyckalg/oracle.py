"""Brute-force references and exhaustive cross-check suites.

The oracles here deliberately avoid the fast paths they check: order is
compared on prefix counts of u steps, meets in the poset suite are computed
from the order relation alone, and relative pseudocomplements are joins over
every candidate in the lattice.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

from . import birkhoff as bk
from . import heyting as hg
from . import itl
from . import posets as ps
from .dyck import DyckError, DyckPath, enumerate_paths, join, leq, meet

DEFAULT_SEED = 1729
ORACLE_CAP = 7
SUITE_CAPS = {"heyting": 6, "stats": 6, "logic": 5, "poset": 5}
SUITES = ("heyting", "stats", "logic", "poset")
TRIPLE_CAP = 5
RANDOM_FORMULAS = 1000


# -- independent reference implementations -------------------------------------


@lru_cache(maxsize=None)
def _ups(word: str) -> tuple[int, ...]:
    counts = [0]
    for s in word:
        counts.append(counts[-1] + (s == "u"))
    return tuple(counts)


def _from_ups(counts) -> DyckPath:
    return DyckPath("".join("u" if b > a else "d" for a, b in zip(counts, counts[1:])))


def ref_leq(p: DyckPath, q: DyckPath) -> bool:
    """Weakly below, compared through running counts of up steps."""
    return all(a <= b for a, b in zip(_ups(p.word), _ups(q.word)))


@lru_cache(maxsize=None)
def _candidates(n: int) -> list[DyckPath]:
    return enumerate_paths(n)


def _ref_lub(paths: list[DyckPath], n: int) -> DyckPath:
    """Least element above all of ``paths`` found by scanning the lattice."""
    uppers = [c for c in _candidates(n) if all(ref_leq(p, c) for p in paths)]
    return next(u for u in uppers if all(ref_leq(u, v) for v in uppers))


def relpseudo_bruteforce(p: DyckPath, q: DyckPath) -> DyckPath:
    """Join of every z with p & z <= q, over all of D_n.

    Works on up-step counts, which order paths exactly like heights do.
    """
    if p.n != q.n:
        raise DyckError(f"semilength mismatch: {p.n} != {q.n}")
    if p.n > ORACLE_CAP:
        raise DyckError(f"oracle capped at n={ORACLE_CAP}")
    up, uq = _ups(p.word), _ups(q.word)
    acc = list(_ups("ud" * p.n))
    for z in _candidates(p.n):
        uz = _ups(z.word)
        if all(min(a, c) <= b for a, b, c in zip(up, uq, uz)):
            acc = [max(a, c) for a, c in zip(acc, uz)]
    return _from_ups(acc)


def maximal_join_irreducibles(p: DyckPath) -> bk.IntervalAntichain:
    """Intervals of all join-irreducibles below p, keeping the maximal ones."""
    n = p.n
    below = [
        (a, b)
        for a in range(1, n)
        for b in range(a, n)
        if ref_leq(bk.join_irreducible(n, (a, b)), p)
    ]
    return bk.IntervalAntichain.of(n, below)


# -- reports -------------------------------------------------------------------


@dataclass
class VerifyReport:
    suite: str
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)
    exceptions: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, inputs, expected, got) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({"inputs": inputs, "expected": expected, "got": got})

    def note(self, **info) -> None:
        """A documented deviation; reported but not a failure."""
        self.exceptions.append(info)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checked": self.checked,
            "failures": self.failures,
            "exceptions": self.exceptions,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# -- suites --------------------------------------------------------------------


def suite_heyting(n: int, report: VerifyReport) -> None:
    paths = enumerate_paths(n)
    bottom = DyckPath.bottom(n)
    imp = {}
    for p in paths:
        for q in paths:
            got = hg.rel_pseudocomplement(p, q)
            imp[p, q] = got
            want = relpseudo_bruteforce(p, q)
            report.check(got == want, ["imp", p.word, q.word], want.word, got.word)

    if n <= TRIPLE_CAP:
        for p, q, z in product(paths, repeat=3):
            lhs = ref_leq(z, imp[p, q])
            rhs = ref_leq(meet(p, z), q)
            report.check(lhs == rhs, ["adjunction", p.word, q.word, z.word], rhs, lhs)

    for p in paths:
        neg = hg.pseudocomplement(p)
        report.check(neg == imp[p, bottom], ["not", p.word], imp[p, bottom].word, neg.word)
        nn = hg.pseudocomplement(neg)
        nnn = hg.pseudocomplement(nn)
        report.check(nnn == neg, ["triple-not", p.word], neg.word, nnn.word)
        report.check(ref_leq(p, nn), ["p<=~~p", p.word], True, ref_leq(p, nn))
        cl = hg.closure(p)
        report.check(cl == nn, ["closure", p.word], nn.word, cl.word)
        report.check(hg.closure(cl) == cl, ["closure-idempotent", p.word], cl.word, hg.closure(cl).word)
        report.check(hg.is_regular(p) == (cl == p), ["regular", p.word], cl == p, hg.is_regular(p))
        inner = range(1, 2 * n)
        flips = all((p.heights[x] == 0) != (neg.heights[x] == 0) for x in inner if x % 2 == 0)
        report.check(flips, ["return-exchange", p.word], True, flips)

    for p in paths:
        for q in paths:
            if ref_leq(p, q):
                ok = ref_leq(hg.closure(p), hg.closure(q))
                report.check(ok, ["closure-monotone", p.word, q.word], True, ok)

    regulars = [p for p in paths if hg.is_regular(p)]
    report.check(len(regulars) == 2 ** (n - 1), ["regular-count", n], 2 ** (n - 1), len(regulars))
    comps = {p: hg.regular_to_composition(p) for p in regulars}
    for p in regulars:
        back = hg.composition_to_regular(comps[p])
        report.check(back == p, ["composition-roundtrip", p.word], p.word, back.word)
    lattice = ps.FinitePoset.from_leq(regulars, ref_leq)
    covers = set(lattice.covers())
    for p, q in product(regulars, repeat=2):
        want = (p, q) in covers
        got = hg.refinement_covers(comps[p], comps[q])
        report.check(want == got, ["refinement-cover", str(comps[p]), str(comps[q])], want, got)


def suite_stats(n: int, report: VerifyReport) -> None:
    bottom = DyckPath.bottom(n)
    for p in enumerate_paths(n):
        f = bk.to_antichain(p)
        report.check(f == maximal_join_irreducibles(p), ["antichain", p.word],
                     str(maximal_join_irreducibles(p)), str(f))
        back = bk.from_antichain(f)
        report.check(back == p, ["from-antichain", p.word], p.word, back.word)
        g = bk.antichain_neg(f)
        report.check(g == bk.to_antichain(hg.pseudocomplement(p)), ["neg", p.word],
                     str(bk.to_antichain(hg.pseudocomplement(p))), str(g))
        report.check(f.weight + g.weight == n - 1, ["partition", p.word], n - 1, f.weight + g.weight)

        geo = bk.stats_geometric(p)
        fs = bk.stats_formula(f)
        for name in bk.STAT_NAMES:
            want, got = getattr(geo, name), getattr(fs, name)
            if p == bottom and name in ("peak_count", "hill_count") and got == want - 1:
                report.note(kind="bottom-path", stat=name, path=p.word, geometric=want, formula=got)
                continue
            report.check(want == got, ["stat", name, p.word], want, got)
        disjoint = all(a[1] < b[0] for a, b in zip(f.intervals, f.intervals[1:]))
        closed = fs.peak_height_sum_closed
        if disjoint and p != bottom:
            report.check(closed == geo.peak_height_sum, ["closed-height-sum", p.word],
                         geo.peak_height_sum, closed)
        elif closed != geo.peak_height_sum:
            report.note(kind="overlap" if not disjoint else "bottom-path", stat="peak_height_sum_closed",
                        path=p.word, geometric=geo.peak_height_sum, formula=closed)

    red = DyckPath("uduuuudduddudduududd")
    fs = bk.stats_formula(bk.to_antichain(red))
    report.note(kind="overlap", stat="peak_height_sum_closed", path=red.word,
                geometric=bk.stats_geometric(red).peak_height_sum, formula=fs.peak_height_sum_closed)

    acs = bk.all_antichains(n)
    report.check(len(acs) == len(enumerate_paths(n)), ["antichain-count", n],
                 len(enumerate_paths(n)), len(acs))
    for f in acs:
        rt = bk.to_antichain(bk.from_antichain(f))
        report.check(rt == f, ["antichain-roundtrip", str(f)], str(f), str(rt))
    paths = enumerate_paths(n)
    if n <= 5:
        for p in paths:
            lub = _ref_lub([bk.join_irreducible(n, iv) for iv in maximal_join_irreducibles(p)] or [bottom], n)
            report.check(lub == p, ["birkhoff", p.word], p.word, lub.word)
    for p, q in product(paths, repeat=2):
        fp, fq = bk.to_antichain(p), bk.to_antichain(q)
        j = bk.antichain_join(fp, fq)
        m = bk.antichain_meet(fp, fq)
        report.check(j == bk.to_antichain(join(p, q)), ["antichain-join", p.word, q.word],
                     str(bk.to_antichain(join(p, q))), str(j))
        report.check(m == bk.to_antichain(meet(p, q)), ["antichain-meet", p.word, q.word],
                     str(bk.to_antichain(meet(p, q))), str(m))


def _classes(order: int) -> list[itl.Formula]:
    """CDF representatives of every class of the subinterval fragment."""
    return [itl.antichain_formula(f) for f in bk.all_antichains(order + 1)]


def random_theta_formula(rng: random.Random, order: int, depth: int = 3) -> itl.Formula:
    """Random combination of closed formulas by & | ~ ~>."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.15:
            return rng.choice([itl.Top(), itl.Bottom()])
        a = rng.randint(1, order)
        b = rng.randint(a, order)
        return itl.eps(a, b) if rng.random() < 0.5 else itl.Var(a)
    op = rng.choice(["&", "|", "~", "~>"])
    if op == "~":
        return itl.PseudoNot(random_theta_formula(rng, order, depth - 1))
    left = random_theta_formula(rng, order, depth - 1)
    right = random_theta_formula(rng, order, depth - 1)
    return {"&": itl.And, "|": itl.Or, "~>": itl.PseudoImplies}[op](left, right)


def suite_logic(n: int, report: VerifyReport, seed: int = DEFAULT_SEED) -> None:
    """Checks at chain orders up to n-1, and the isomorphism with D_2..D_n."""
    for order in range(1, max(n - 1, 1) + 1):
        cls = _classes(order)
        for iv in itl.chain_intervals(order):
            v = itl.evaluate(itl.eps(*iv), order)
            want = frozenset(itl.subintervals(iv))
            report.check(v.true_on == want, ["eps-law", order, list(iv)], sorted(want), v.sorted())
        for f in cls:
            report.check(itl.in_theta(f, order), ["cdf-in-theta", itl.to_text(f)], True, False)
            negs = [itl.PseudoNot(f), itl.PseudoNot(itl.PseudoNot(itl.PseudoNot(f)))]
            report.check(itl.equivalent(*negs, order), ["triple-pseudonot", itl.to_text(f)], True, False)
            nn = itl.evaluate(itl.PseudoNot(itl.PseudoNot(f)), order)
            ok = itl.evaluate(f, order) <= nn
            report.check(ok, ["f<=~~f", itl.to_text(f)], True, ok)
            same = itl.equivalent(itl.PseudoNot(f), itl.PseudoImplies(f, itl.Bottom()), order)
            report.check(same, ["~f = f~>F", itl.to_text(f)], True, same)
        if order <= 3:
            vals = {f: itl.evaluate(f, order) for f in cls}
            for f, g in product(cls, repeat=2):
                for con in (itl.And, itl.Or, itl.PseudoImplies):
                    h = con(f, g)
                    ok = itl.in_theta(h, order)
                    report.check(ok, ["theta-closure", itl.to_text(h)], True, ok)
                imp = itl.evaluate(itl.PseudoImplies(f, g), order)
                for h in cls:
                    lhs = vals[h] <= imp
                    rhs = (vals[f].true_on & vals[h].true_on) <= vals[g].true_on
                    report.check(lhs == rhs, ["residuation", itl.to_text(f), itl.to_text(g),
                                              itl.to_text(h)], rhs, lhs)

    if n >= 4:
        rng = random.Random(seed)
        for _ in range(RANDOM_FORMULAS):
            f = random_theta_formula(rng, 4)
            ok = itl.in_theta(f, 4)
            report.check(ok, ["random-theta", itl.to_text(f)], True, ok)

    phi = itl.parse_formula("e1 | e2")
    if n >= 3:
        for text in ("!(e1 | e2)", "(e1 | e2) -> e2"):
            w = itl.theta_witness(itl.parse_formula(text), 3)
            report.check(w is not None, ["non-closure", text], "witness", w)
        strict = itl.evaluate(phi, 3).true_on < itl.evaluate(itl.parse_formula("~~(e1|e2)"), 3).true_on
        report.check(strict, ["double-negation-strict", "e1 | e2"], True, strict)

    for m in range(2, n + 1):
        check_isomorphism(m, report)


def check_isomorphism(m: int, report: VerifyReport) -> None:
    """theta_to_dyck maps the classes over the (m-1)-chain onto D_m,
    carrying & | ~> ~ to meet, join, rel_pseudocomplement, pseudocomplement."""
    order = m - 1
    cls = _classes(order)
    image = {f: itl.theta_to_dyck(f, order) for f in cls}
    paths = set(enumerate_paths(m))
    ok = set(image.values()) == paths and len(image) == len(paths)
    report.check(ok, ["bijection", m], len(paths), len(set(image.values())))
    for f in cls:
        back = itl.dyck_to_theta(image[f])
        report.check(back == f, ["inverse", itl.to_text(f)], itl.to_text(f), itl.to_text(back))
        neg = itl.theta_to_dyck(itl.PseudoNot(f), order)
        report.check(neg == hg.pseudocomplement(image[f]), ["iso-not", itl.to_text(f)],
                     hg.pseudocomplement(image[f]).word, neg.word)
    for f, g in product(cls, repeat=2):
        p, q = image[f], image[g]
        pairs = [
            ("iso-or", itl.Or, join(p, q)),
            ("iso-and", itl.And, meet(p, q)),
            ("iso-imp", itl.PseudoImplies, hg.rel_pseudocomplement(p, q)),
        ]
        for tag, con, want in pairs:
            got = itl.theta_to_dyck(con(f, g), order)
            report.check(got == want, [tag, itl.to_text(f), itl.to_text(g)], want.word, got.word)


def ref_meet(lat: ps.FinitePoset, u, v):
    """Greatest lower bound found from the order relation alone."""
    lower = [w for w in lat.elements if lat.leq(w, u) and lat.leq(w, v)]
    return next(w for w in lower if all(lat.leq(x, w) for x in lower))


def sample_posets(n: int) -> list[tuple[str, ps.FinitePoset]]:
    out = [(f"chain{k}", ps.chain(k)) for k in range(1, max(n - 1, 1) + 1)]
    out += [(f"antichain{k}", ps.antichain(k)) for k in range(1, 5)]
    out.append(("B2", ps.parse_poset({"elements": ["0", "a", "b", "1"],
                                      "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]})))
    out.append(("V", ps.parse_poset({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["a", "c"]]})))
    out.append(("N", ps.parse_poset({"elements": ["a", "b", "c", "d"],
                                     "leq": [["a", "c"], ["b", "c"], ["b", "d"]]})))
    return out


def suite_poset(n: int, report: VerifyReport) -> None:
    for name, p in sample_posets(n):
        q = ps.intervals_poset(p)
        lat = ps.downset_lattice(q)
        atoms = ps.lattice_atoms(q)
        report.check(len(atoms) == len(p), ["atom-count", name], len(p), len(atoms))
        want_atoms = {frozenset({ps.IntervalElement(x, x)}) for x in p.elements}
        got_atoms = {a.members for a in atoms}
        report.check(got_atoms == want_atoms, ["atoms", name], len(want_atoms), len(got_atoms))
        for u in lat:
            if u.members:
                ok = any(a.members <= u.members for a in atoms)
                report.check(ok, ["atomic", name, u.label()], True, ok)
        if len(q) <= 8:
            lp = lat.as_poset()
            for u, v in product(lat.elements, repeat=2):
                imp = ps.ds_implies(u, v)
                brute = lat.bottom
                for w in lat:
                    if (u.members & w.members) <= v.members:
                        brute = brute | w
                report.check(imp == brute, ["ds-implies", name, u.label(), v.label()],
                             brute.label(), imp.label())
                m = ref_meet(lp, u, v)
                report.check(m == (u & v), ["ds-meet", name, u.label(), v.label()],
                             m.label(), (u & v).label())
                for w in lat:
                    lhs = w.members <= imp.members
                    rhs = (u.members & w.members) <= v.members
                    if lhs != rhs:
                        report.check(False, ["ds-adjunction", name, u.label(), v.label(), w.label()],
                                     rhs, lhs)
                        break
                else:
                    report.checked += 1

    for k in range(1, 5):
        lat = ps.downset_lattice(ps.intervals_poset(ps.antichain(k)))
        report.check(len(lat) == 2 ** k, ["boolean-size", k], 2 ** k, len(lat))
        iso = ps.is_isomorphic(lat.as_poset(), ps.boolean_lattice(k))
        report.check(iso is not None, ["boolean-iso", k], True, iso is not None)
        for u in lat:
            c = ps.ds_pseudo(u)
            ok = (u | c) == lat.top and not (u.members & c.members)
            report.check(ok, ["complemented", k, u.label()], True, ok)

    b2 = ps.intervals_poset(dict(sample_posets(1))["B2"])
    report.check(len(b2) == 9, ["int-B2"], 9, len(b2))

    for m in range(2, min(n, SUITE_CAPS["poset"]) + 1):
        check_chain_specialization(m, report)


def check_chain_specialization(m: int, report: VerifyReport) -> None:
    lat = ps.downset_lattice(ps.intervals_poset(ps.chain(m - 1)))
    lp = lat.as_poset()
    dyck = ps.FinitePoset.from_leq(enumerate_paths(m), leq)
    iso = ps.is_isomorphic(lp, dyck)
    report.check(iso is not None, ["chain-iso", m], True, iso is not None)
    if iso is None:
        return
    for u, v in product(lat.elements, repeat=2):
        want = hg.rel_pseudocomplement(iso[u], iso[v])
        got = iso[ps.ds_implies(u, v)]
        report.check(got == want, ["chain-imp", m, u.label(), v.label()], want.word, got.word)
    for u in lat:
        want = hg.pseudocomplement(iso[u])
        got = iso[ps.ds_pseudo(u)]
        report.check(got == want, ["chain-not", m, u.label()], want.word, got.word)


_RUNNERS: dict[str, Callable] = {
    "heyting": suite_heyting,
    "stats": suite_stats,
    "logic": suite_logic,
    "poset": suite_poset,
}


class SuiteError(ValueError):
    pass


def run_suite(name: str, n: int, seed: int = DEFAULT_SEED) -> list[VerifyReport]:
    """Run one suite (or ``"all"``) at size n; one report per suite."""
    names = SUITES if name == "all" else (name,)
    for s in names:
        if s not in _RUNNERS:
            raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        if not 1 <= n <= SUITE_CAPS[s]:
            raise SuiteError(f"suite {s} needs 1 <= n <= {SUITE_CAPS[s]}, got {n}")
    out = []
    for s in names:
        report = VerifyReport(s, n)
        if s == "logic":
            suite_logic(n, report, seed)
        else:
            _RUNNERS[s](n, report)
        out.append(report)
    return out
