"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite reports failures,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import birkhoff as bk
from . import heyting as hg
from . import itl
from . import oracle
from . import posets as ps
from .dyck import DyckPath, enumerate_paths, join, leq, meet, parse_word
from .render import dyck_lattice_dot, regular_lattice_dot, render_ascii


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit_path(args, p: DyckPath) -> str:
    return _dump(p.to_json()) if args.format == "json" else p.word


# -- path --------------------------------------------------------------------


def cmd_path_op(args) -> str:
    p = parse_word(args.p)
    unary = {"not": hg.pseudocomplement, "closure": hg.closure}
    if args.op in unary:
        if args.q is not None:
            raise UsageError(f"'{args.op}' takes one path")
        return _emit_path(args, unary[args.op](p))
    if args.q is None:
        raise UsageError(f"'{args.op}' needs two paths")
    q = parse_word(args.q)
    binary = {"meet": meet, "join": join, "imp": hg.rel_pseudocomplement}
    return _emit_path(args, binary[args.op](p, q))


def cmd_path_leq(args) -> str:
    ans = leq(parse_word(args.p), parse_word(args.q))
    return _dump(ans) if args.format == "json" else str(ans).lower()


def cmd_path_crossing(args) -> str:
    cs = hg.crossing_set(parse_word(args.p), parse_word(args.q))
    if args.format == "json":
        return _dump(cs.to_json())
    return " ".join(map(str, cs.abscissas))


def cmd_path_stats(args) -> str:
    p = parse_word(args.word)
    f = bk.to_antichain(p)
    geo = bk.stats_geometric(p)
    form = bk.stats_formula(f)
    feats = p.features
    if args.format == "json":
        return _dump(
            {
                "path": p.to_json(),
                "antichain": f.to_json(),
                "features": {
                    "peaks": [list(pk) for pk in feats.peaks],
                    "hills": [list(pk) for pk in feats.hills],
                    "returns": list(feats.returns),
                    "factors": [list(fc) for fc in feats.factors],
                },
                "geometric": geo._asdict(),
                "formula": form._asdict(),
            }
        )
    lines = [
        f"path       {p.word}",
        f"antichain  {f}",
        f"peaks      {' '.join(f'{x}:{h}' for x, h in feats.peaks)}",
        f"returns    {' '.join(map(str, feats.returns))}",
        f"{'statistic':<28}{'geometric':>10}{'formula':>10}",
    ]
    for name in bk.STAT_NAMES:
        lines.append(f"{name:<28}{getattr(geo, name):>10}{getattr(form, name):>10}")
    lines.append(f"{'peak_height_sum (closed form)':<28}{'':>10}{form.peak_height_sum_closed:>10}")
    return "\n".join(lines)


def cmd_path_render(args) -> str:
    return render_ascii(parse_word(args.word)).rstrip("\n")


def cmd_path_intervals(args) -> str:
    f = bk.to_antichain(parse_word(args.word))
    return _dump(f.to_json()) if args.format == "json" else str(f)


def cmd_path_from_intervals(args) -> str:
    obj = json.loads(args.spec)
    if isinstance(obj, dict):
        f = bk.IntervalAntichain.from_json(obj)
    else:
        if args.n is None:
            raise UsageError("a bare interval list needs -n")
        f = bk.IntervalAntichain(args.n, tuple(tuple(iv) for iv in obj))
    return _emit_path(args, bk.from_antichain(f))


def cmd_path_composition(args) -> str:
    c = hg.regular_to_composition(parse_word(args.word))
    return _dump(c.to_json()) if args.format == "json" else " ".join(map(str, c.parts))


def cmd_path_from_composition(args) -> str:
    parts = tuple(int(x) for x in args.parts.replace(",", " ").split())
    return _emit_path(args, hg.composition_to_regular(hg.Composition(parts)))


def cmd_path_atom(args) -> str:
    a, b = args.a, args.b if args.b is not None else args.a
    return _emit_path(args, bk.join_irreducible(args.n, (a, b)))


# -- logic -------------------------------------------------------------------


def _order(args) -> int:
    if args.n is None:
        raise UsageError("this command needs -n (chain order)")
    return args.n


def cmd_logic_eval(args) -> str:
    v = itl.evaluate(itl.parse_formula(args.formula), _order(args))
    if args.format == "json":
        return _dump(v.to_json())
    return " ".join(f"[{a},{b}]" for a, b in v.sorted()) or "(nowhere)"


def cmd_logic_valid(args) -> str:
    ans = itl.is_valid(itl.parse_formula(args.formula), _order(args))
    return _dump(ans) if args.format == "json" else str(ans).lower()


def cmd_logic_theta(args) -> str:
    w = itl.theta_witness(itl.parse_formula(args.formula), _order(args))
    if args.format == "json":
        return _dump({"in_theta": w is None, "witness": None if w is None else [list(w[0]), list(w[1])]})
    if w is None:
        return "true"
    return f"false: true on [{w[0][0]},{w[0][1]}], false on [{w[1][0]},{w[1][1]}]"


def cmd_logic_equiv(args) -> str:
    n = _order(args)
    ans = itl.equivalent(itl.parse_formula(args.f), itl.parse_formula(args.g), n)
    return _dump(ans) if args.format == "json" else str(ans).lower()


def cmd_logic_cdf(args) -> str:
    n = _order(args)
    f = itl.parse_formula(args.formula)
    ivs = itl.cdf_intervals(f, n)
    text = itl.to_text(itl.cdf_from_intervals(ivs))
    if args.format == "json":
        return _dump({"n": n, "intervals": [list(iv) for iv in ivs], "formula": text})
    return text


def cmd_logic_to_path(args) -> str:
    # -n is the semilength of the target path; the formula lives on the (n-1)-chain
    n = _order(args)
    if n < 2:
        raise UsageError("to-path needs -n >= 2")
    return _emit_path(args, itl.theta_to_dyck(itl.parse_formula(args.formula), n - 1))


def cmd_logic_from_path(args) -> str:
    p = parse_word(args.word)
    text = itl.to_text(itl.dyck_to_theta(p))
    if args.format == "json":
        return _dump({"n": p.n - 1, "formula": text})
    return text


# -- lattice -----------------------------------------------------------------


def cmd_lattice_enum(args) -> str:
    if args.format == "dot":
        return dyck_lattice_dot(args.n).rstrip("\n")
    paths = enumerate_paths(args.n)
    if args.format == "json":
        return _dump({"n": args.n, "paths": [p.word for p in paths]})
    return "\n".join(p.word for p in paths)


def cmd_lattice_regulars(args) -> str:
    if args.format == "dot":
        return regular_lattice_dot(args.n).rstrip("\n")
    regs = [p for p in enumerate_paths(args.n) if hg.is_regular(p)]
    if args.format == "json":
        return _dump(
            {
                "n": args.n,
                "regulars": [
                    {"word": p.word, "parts": list(hg.regular_to_composition(p).parts)} for p in regs
                ],
            }
        )
    return "\n".join(f"{p.word}  {' '.join(map(str, hg.regular_to_composition(p).parts))}" for p in regs)


# -- poset -------------------------------------------------------------------


def _load_poset(path: str) -> ps.FinitePoset:
    try:
        return ps.parse_poset(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _iv_json(iv: ps.IntervalElement) -> list:
    return [iv.lo, iv.hi]


def cmd_poset_intervals(args) -> str:
    q = ps.intervals_poset(_load_poset(args.file))
    if args.format == "dot":
        return ps.hasse_dot(q, name="Int").rstrip("\n")
    if args.format == "json":
        return _dump({"intervals": [_iv_json(iv) for iv in q.elements]})
    return " ".join(map(str, q.elements))


def cmd_poset_downsets(args) -> str:
    q = ps.intervals_poset(_load_poset(args.file))
    lat = ps.downset_lattice(q)
    if args.format == "dot":
        return ps.hasse_dot(lat.as_poset(), label=lambda d: d.label(), name="O").rstrip("\n")
    order = {e: i for i, e in enumerate(q.elements)}
    rows = [sorted(d.members, key=order.get) for d in lat]
    if args.format == "json":
        return _dump({"count": len(rows), "downsets": [[_iv_json(iv) for iv in r] for r in rows]})
    return "\n".join("{" + ",".join(map(str, r)) + "}" for r in rows)


def cmd_poset_atoms(args) -> str:
    atoms = ps.lattice_atoms(ps.intervals_poset(_load_poset(args.file)))
    if args.format == "json":
        return _dump({"atoms": [[_iv_json(iv) for iv in a.members] for a in atoms]})
    return "\n".join(a.label() for a in atoms)


def _against(spec: str) -> tuple[ps.FinitePoset, callable]:
    kind, _, arg = spec.partition(":")
    if kind == "dyck" and arg.isdigit():
        from .render import dyck_lattice

        return dyck_lattice(int(arg)), lambda p: p.word
    if kind == "boolean" and arg.isdigit():
        return ps.boolean_lattice(int(arg)), lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
    other = ps.downset_lattice(ps.intervals_poset(_load_poset(spec)))
    return other.as_poset(), lambda d: d.label()


def cmd_poset_iso(args) -> str:
    lat = ps.downset_lattice(ps.intervals_poset(_load_poset(args.file))).as_poset()
    target, label = _against(args.against)
    iso = ps.is_isomorphic(lat, target)
    if args.format == "json":
        mapping = None if iso is None else [[d.label(), label(iso[d])] for d in lat.elements]
        return _dump({"isomorphic": iso is not None, "mapping": mapping})
    if iso is None:
        return "not isomorphic"
    return "\n".join(f"{d.label()} -> {label(iso[d])}" for d in lat.elements)


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> tuple[str, int]:
    reports = oracle.run_suite(args.suite, args.n, args.seed)
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return "\n".join(r.dumps() for r in reports), status
    lines = []
    for r in reports:
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{verdict} {r.suite:<8} n={r.n} checked={r.checked} "
            f"failures={len(r.failures)} documented_exceptions={len(r.exceptions)}"
        )
        for fail in r.failures[:10]:
            lines.append(f"  failure: {_dump(fail)}")
        for exc in r.exceptions:
            if exc.get("kind") == "overlap" and len(exc["path"]) > 2 * args.n:
                lines.append(f"  exception: {_dump(exc)}")
    return "\n".join(lines), status


# -- parser ------------------------------------------------------------------


def _fmt(p, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyckalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    path = sub.add_parser("path", help="operations on single Dyck paths").add_subparsers(
        dest="cmd", required=True
    )
    c = path.add_parser("op", help="meet, join, imp (p ~> q), not (~p), closure (~~p)")
    c.add_argument("op", choices=["meet", "join", "imp", "not", "closure"])
    c.add_argument("p")
    c.add_argument("q", nargs="?")
    _fmt(c)
    c.set_defaults(func=cmd_path_op)
    c = path.add_parser("leq", help="is P weakly below Q")
    c.add_argument("p")
    c.add_argument("q")
    _fmt(c)
    c.set_defaults(func=cmd_path_leq)
    c = path.add_parser("crossing", help="crossing set of (P, Q)")
    c.add_argument("p")
    c.add_argument("q")
    _fmt(c)
    c.set_defaults(func=cmd_path_crossing)
    c = path.add_parser("stats", help="features and statistics, scanned and from the antichain")
    c.add_argument("word")
    _fmt(c)
    c.set_defaults(func=cmd_path_stats)
    c = path.add_parser("render", help="ASCII drawing")
    c.add_argument("word")
    c.set_defaults(func=cmd_path_render)
    c = path.add_parser("intervals", help="antichain of atom-order intervals")
    c.add_argument("word")
    _fmt(c)
    c.set_defaults(func=cmd_path_intervals)
    c = path.add_parser("from-intervals", help="path from an antichain (JSON object or list with -n)")
    c.add_argument("spec")
    c.add_argument("-n", type=int)
    _fmt(c)
    c.set_defaults(func=cmd_path_from_intervals)
    c = path.add_parser("irreducible", help="join-irreducible for [a,b] (atom when b is omitted)")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("a", type=int)
    c.add_argument("b", type=int, nargs="?")
    _fmt(c)
    c.set_defaults(func=cmd_path_atom)
    c = path.add_parser("composition", help="composition of a regular path")
    c.add_argument("word")
    _fmt(c)
    c.set_defaults(func=cmd_path_composition)
    c = path.add_parser("from-composition", help="regular path of a composition, e.g. 1,2,1")
    c.add_argument("parts")
    _fmt(c)
    c.set_defaults(func=cmd_path_from_composition)

    logic = sub.add_parser("logic", help="subinterval logic over an n-chain").add_subparsers(
        dest="cmd", required=True
    )
    for name, func, doc in [
        ("eval", cmd_logic_eval, "intervals where the formula holds"),
        ("valid", cmd_logic_valid, "true on every interval"),
        ("theta", cmd_logic_theta, "preserved under subintervals, with witness"),
        ("cdf", cmd_logic_cdf, "closed disjunctive form"),
        ("to-path", cmd_logic_to_path, "image in D_n of a formula over the (n-1)-chain"),
    ]:
        c = logic.add_parser(name, help=doc)
        c.add_argument("-n", type=int, required=True)
        c.add_argument("formula")
        _fmt(c)
        c.set_defaults(func=func)
    c = logic.add_parser("equiv", help="same valuation")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("f")
    c.add_argument("g")
    _fmt(c)
    c.set_defaults(func=cmd_logic_equiv)
    c = logic.add_parser("from-path", help="closed disjunctive form of a path")
    c.add_argument("word")
    _fmt(c)
    c.set_defaults(func=cmd_logic_from_path)

    lattice = sub.add_parser("lattice", help="whole Dyck lattices").add_subparsers(
        dest="cmd", required=True
    )
    for name, func in [("enum", cmd_lattice_enum), ("regulars", cmd_lattice_regulars)]:
        c = lattice.add_parser(name)
        c.add_argument("-n", type=int, required=True)
        _fmt(c, ("text", "json", "dot"))
        c.set_defaults(func=func)

    poset = sub.add_parser("poset", help="interval posets and their down-set algebras").add_subparsers(
        dest="cmd", required=True
    )
    for name, func, fmts in [
        ("intervals", cmd_poset_intervals, ("text", "json", "dot")),
        ("downsets", cmd_poset_downsets, ("text", "json", "dot")),
        ("atoms", cmd_poset_atoms, ("text", "json")),
        ("iso", cmd_poset_iso, ("text", "json")),
    ]:
        c = poset.add_parser(name)
        c.add_argument("--file", required=True)
        if name == "iso":
            c.add_argument("--against", required=True, help="dyck:N, boolean:K or another poset file")
        _fmt(c, fmts)
        c.set_defaults(func=func)

    c = sub.add_parser("verify", help="exhaustive cross-checks against brute force")
    c.add_argument("--suite", required=True, choices=[*oracle.SUITES, "all"])
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    _fmt(c)
    c.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute one command; returns (exit status, standard output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        out = args.func(args)
    except (UsageError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    if isinstance(out, tuple):
        out, status = out
        return status, out
    return 0, out


def main(argv: list[str] | None = None) -> int:
    status, out = run(argv)
    if out:
        print(out)
    return status
