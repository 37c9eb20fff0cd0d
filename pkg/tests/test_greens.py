from itertools import combinations

import pytest

from transgen.greens import d_classes, ordered_elements
from transgen.semigroup import closure, evaluate_word, principal_ideal_membership
from transgen.transform import rank, symmetric_group

from conftest import T, random_transformation


def brute_classes(table):
    """Group elements by mutual two-sided ideal membership."""
    els = table.elements
    classes = []
    for x in els:
        for c in classes:
            y = c[0]
            if (principal_ideal_membership(table, x, y)
                    and principal_ideal_membership(table, y, x)):
                c.append(x)
                break
        else:
            classes.append([x])
    return sorted(sorted(c) for c in classes)


def as_sets(table, dec):
    return sorted(sorted(table.elements[i] for i in c) for c in dec.classes)


def test_full_t3(full_t3):
    dec = d_classes(full_t3)
    assert sorted(len(c) for c in dec.classes) == [3, 6, 18]
    assert as_sets(full_t3, dec) == brute_classes(full_t3)
    by_rank = {dec.ranks[c]: len(dec.classes[c]) for c in range(len(dec))}
    assert by_rank == {3: 6, 2: 18, 1: 3}


def test_group_has_one_class():
    g = closure(symmetric_group(4)[1:3])
    dec = d_classes(g)
    assert len(dec) == 1
    assert ordered_elements(g, dec) == sorted(g.elements)


def test_two_constants(rng):
    t = closure([T(1, 1, 1), T(2, 2, 2)])
    assert as_sets(t, d_classes(t)) == brute_classes(t)
    for _ in range(25):
        t = closure([random_transformation(rng, 4) for _ in range(2)])
        assert as_sets(t, d_classes(t)) == brute_classes(t)


def test_ordered_elements_t3(full_t3):
    desc = ordered_elements(full_t3, direction='descending')
    assert [rank(f) for f in desc] == [3] * 6 + [2] * 18 + [1] * 3
    assert desc[:6] == sorted(desc[:6])
    asc = ordered_elements(full_t3, direction='ascending')
    assert [rank(f) for f in asc] == [1] * 3 + [2] * 18 + [3] * 6


def check_order(table):
    dec = d_classes(table)
    els = table.elements
    # partition and rank constancy
    seen = sorted(i for c in dec.classes for i in c)
    assert seen == list(range(len(table)))
    for c, members in enumerate(dec.classes):
        assert {rank(els[i]) for i in members} == {dec.ranks[c]}
        for i in members:
            assert dec.class_of[i] == c
    # strict order: irreflexive, transitive, agrees with ideal containment
    edges = dec.order_edges
    assert all(a != b for a, b in edges)
    for a, b in edges:
        for c, d in edges:
            if b == c:
                assert (a, d) in edges
    for a in range(len(dec)):
        for b in range(len(dec)):
            if a == b:
                continue
            x, y = els[dec.classes[a][0]], els[dec.classes[b][0]]
            assert dec.is_below(a, b) is principal_ideal_membership(table, x, y)
    # descending listing never puts a class after one below it
    pos = {c: k for k, c in enumerate(dec.topological_listing)}
    for low, up in edges:
        assert pos[up] < pos[low]
    # every element lies below some maximal class
    maxima = dec.maximal_classes()
    for c in range(len(dec)):
        assert c in maxima or any(dec.is_below(c, m) for m in maxima)
    return dec


def test_order_properties_random(rng):
    for n, k in [(3, 2), (4, 2), (4, 3)]:
        for _ in range(8):
            check_order(closure([random_transformation(rng, n) for _ in range(k)]))


def test_subword_products_lie_above(rng):
    for _ in range(10):
        t = closure([random_transformation(rng, 4) for _ in range(2)])
        if len(t) > 200:
            continue
        for e, w in zip(t.elements, t.words):
            for i, j in combinations(range(len(w) + 1), 2):
                p = evaluate_word(t.generators, w[i:j])
                assert principal_ideal_membership(t, e, p)


def test_tie_break_incomparable_classes():
    # two constants form two incomparable singleton classes of equal rank
    t = closure([T(2, 2, 2), T(1, 1, 1)])
    assert ordered_elements(t) == [T(1, 1, 1), T(2, 2, 2)]
    # higher rank wins among incomparable classes
    t = closure([T(1, 1, 1), T(1, 2, 2)])
    dec = d_classes(t)
    assert ordered_elements(t, dec)[0] == T(1, 2, 2)


def test_hasse_edges_t3(full_t3):
    dec = d_classes(full_t3)
    ranks = dec.ranks
    assert sorted((ranks[a], ranks[b]) for a, b in dec.hasse_edges()) == [(1, 2), (2, 3)]
    assert len(dec.order_edges) == 3


def test_unknown_direction(full_t3):
    with pytest.raises(ValueError):
        ordered_elements(full_t3, direction='sideways')
