import json
from itertools import product

import pytest
from hypothesis import given

from dyckalg.dyck import DyckError, DyckPath, enumerate_paths, join, leq, meet
from dyckalg.heyting import (
    Composition,
    CrossingSet,
    closure,
    composition_to_regular,
    compositions,
    crossing_set,
    is_regular,
    pseudocomplement,
    refinement_covers,
    regular_elements,
    regular_to_composition,
    rel_pseudocomplement,
)

from conftest import BLACK, GREEN_IMP, GREEN_NEG, RED, dyck_paths, path_pairs


def join_all(paths, n):
    acc = DyckPath.bottom(n)
    for z in paths:
        acc = join(acc, z)
    return acc


def brute_imp(p, q):
    return join_all([z for z in enumerate_paths(p.n) if leq(meet(p, z), q)], p.n)


def test_crossing_set_red_blue(red, blue):
    assert crossing_set(red, blue).abscissas == (0, 5, 7, 11, 13, 20)


def test_crossing_set_small_and_trivial():
    assert crossing_set(DyckPath("uduudd"), DyckPath("uuddud")).abscissas == (0, 3, 5, 6)
    p = DyckPath(RED)
    assert crossing_set(p, p).abscissas == (0, 20)


def test_crossing_set_not_symmetric(red, blue):
    assert crossing_set(blue, red) != crossing_set(red, blue)


def test_touching_from_above_is_not_a_crossing():
    # p's valley sits on q's peak at x=5: both crossing conditions hold there
    p, q = DyckPath("uuuddudd"), DyckPath("udududud")
    assert p.heights[5] == q.heights[5] == 1
    assert crossing_set(p, q).abscissas == (0, 1, 7, 8)
    assert rel_pseudocomplement(p, q) == brute_imp(p, q)


@given(path_pairs(max_n=15))
def test_crossing_set_segments_alternate(pair):
    p, q = pair
    cs = crossing_set(p, q)
    assert len(cs.abscissas) % 2 == 0
    for i, (a, b) in enumerate(cs.segments()):
        if i % 2 == 0:
            assert all(p.heights[x] <= q.heights[x] for x in range(a, b + 1))
        else:
            # strictly above except where a valley of p rests on a peak of q
            for x in range(a + 1, b):
                assert p.heights[x] >= q.heights[x]
                if p.heights[x] == q.heights[x]:
                    assert p.word[x - 1 : x + 1] == "du" and q.word[x - 1 : x + 1] == "ud"


def test_crossing_set_json():
    cs = CrossingSet((0, 3, 5, 6))
    assert CrossingSet.from_json(json.loads(json.dumps(cs.to_json()))) == cs
    with pytest.raises(ValueError):
        CrossingSet((0, 3, 6))


def test_rel_pseudocomplement_examples(red, blue):
    assert rel_pseudocomplement(red, blue).word == GREEN_IMP
    assert rel_pseudocomplement(DyckPath("uduudd"), DyckPath("uuddud")).word == "uuddud"
    assert rel_pseudocomplement(red, red) == DyckPath.top(10)
    with pytest.raises(DyckError):
        rel_pseudocomplement(DyckPath("ud"), DyckPath("uudd"))


@pytest.mark.parametrize("n", range(1, 6))
def test_rel_pseudocomplement_matches_bruteforce(n):
    for p, q in product(enumerate_paths(n), repeat=2):
        assert rel_pseudocomplement(p, q) == brute_imp(p, q), (p.word, q.word)


@pytest.mark.parametrize("n", range(1, 5))
def test_adjunction_exhaustive(n):
    ps = enumerate_paths(n)
    for p, q in product(ps, repeat=2):
        imp = rel_pseudocomplement(p, q)
        for z in ps:
            assert leq(z, imp) == leq(meet(p, z), q)


@given(path_pairs(max_n=25, k=3))
def test_adjunction_random_large(triple):
    p, q, z = triple
    imp = rel_pseudocomplement(p, q)
    assert leq(meet(p, imp), q)
    assert leq(z, imp) == leq(meet(p, z), q)


def test_pseudocomplement_examples(black):
    assert pseudocomplement(black).word == GREEN_NEG
    assert pseudocomplement(DyckPath("uuddud")).word == "uduudd"
    assert pseudocomplement(DyckPath("ududud")).word == "uuuddd"
    assert pseudocomplement(DyckPath("uuuddd")).word == "ududud"


def test_pseudocomplement_small_oracle():
    p = DyckPath("uuddud")
    disjoint = [z for z in enumerate_paths(3) if meet(p, z) == DyckPath.bottom(3)]
    assert join_all(disjoint, 3).word == "uduudd"


@given(dyck_paths(max_n=25))
def test_pseudocomplement_agrees_with_rel_against_bottom(p):
    assert pseudocomplement(p) == rel_pseudocomplement(p, DyckPath.bottom(p.n))


@given(dyck_paths(max_n=25))
def test_pseudocomplement_exchanges_returns(p):
    neg = pseudocomplement(p)
    for x in range(2, 2 * p.n, 2):
        assert (p.heights[x] == 0) != (neg.heights[x] == 0)


@given(dyck_paths(max_n=25))
def test_heyting_negation_identities(p):
    neg = pseudocomplement(p)
    assert pseudocomplement(pseudocomplement(neg)) == neg
    assert leq(p, pseudocomplement(neg))
    assert meet(p, neg) == DyckPath.bottom(p.n)


def test_closure_examples(red):
    assert closure(DyckPath("uududd")).word == "uuuddd"
    assert closure(DyckPath("uduudd")).word == "uduudd"
    assert closure(red).word == "ud" + "u" * 6 + "d" * 6 + "uuuddd"


@given(path_pairs(max_n=20))
def test_closure_operator(pair):
    p, q = pair
    c = closure(p)
    assert c == pseudocomplement(pseudocomplement(p))
    assert leq(p, c)
    assert closure(c) == c
    if leq(p, q):
        assert leq(c, closure(q))


def test_is_regular_examples():
    assert is_regular(DyckPath("uduudd"))
    assert not is_regular(DyckPath("uududd"))
    assert is_regular(DyckPath.top(7))


@pytest.mark.parametrize("n", range(1, 8))
def test_regular_count_and_closure_fixpoints(n):
    regs = [p for p in enumerate_paths(n) if is_regular(p)]
    assert len(regs) == 2 ** (n - 1)
    assert all(closure(p) == p for p in regs)
    assert sorted(regs, key=str) == sorted(regular_elements(n), key=str)


def test_compositions():
    assert regular_to_composition(DyckPath("uduudd")) == Composition((1, 2))
    assert regular_to_composition(DyckPath.top(4)) == Composition((4,))
    assert composition_to_regular(Composition((1, 1, 1, 1))).word == "udududud"
    with pytest.raises(DyckError):
        regular_to_composition(DyckPath("uududd"))
    c = Composition((2, 1, 1))
    assert Composition.from_json(json.loads(json.dumps(c.to_json()))) == c
    with pytest.raises(ValueError):
        Composition((1, 0))


def test_refinement_covers_examples():
    assert refinement_covers(Composition((2, 1, 1)), Composition((3, 1)))
    assert not refinement_covers(Composition((2, 1, 1)), Composition((1, 3)))
    assert not refinement_covers(Composition((4,)), Composition((4,)))
    with pytest.raises(ValueError):
        refinement_covers(Composition((1,)), Composition((2,)))


@pytest.mark.parametrize("n", range(1, 7))
def test_regular_order_is_refinement_order(n):
    comps = compositions(n)
    assert len(set(comps)) == 2 ** (n - 1)
    for a, b in product(comps, repeat=2):
        pa, pb = composition_to_regular(a), composition_to_regular(b)
        # coarsening = the cut points of b are a subset of those of a
        cuts = lambda c: {sum(c.parts[: i + 1]) for i in range(len(c.parts) - 1)}
        assert leq(pa, pb) == (cuts(b) <= cuts(a))
        assert regular_to_composition(pa) == a
