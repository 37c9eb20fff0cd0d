from itertools import combinations, product

import pytest

from transgen.errors import InvalidInputError, ResourceLimitError
from transgen.gensets import (enumerate_irredundant_generating_sets, greedy,
                              is_irredundant, is_ubiquitous, monoid_rank,
                              satisfies_sufficient_condition, semigroup_rank,
                              small_generating_set)
from transgen.greens import ordered_elements
from transgen.semigroup import closure
from transgen.transform import compose, identity, rank, symmetric_group

from conftest import T, random_transformation


def naive_rank(table):
    els = table.elements
    for m in range(1, len(els) + 1):
        for sub in combinations(els, m):
            if len(closure(list(sub))) == len(els):
                return m


def naive_irredundant_sets(table):
    els = table.elements
    out = []
    for m in range(1, len(els) + 1):
        for sub in combinations(els, m):
            sub = list(sub)
            if len(closure(sub)) == len(els) and is_irredundant(sub):
                out.append(sorted(sub))
    return sorted(out)


# greedy

def test_greedy_identity_first(cyclic3):
    rep = greedy([identity(3), T(2, 3, 1), T(3, 1, 2)])
    assert rep.generating_set == [identity(3), T(2, 3, 1)]
    assert rep.size == 2 and not rep.is_irredundant
    assert rep.semigroup_size == 3


def test_greedy_generator_first():
    rep = greedy([T(2, 3, 1), T(3, 1, 2), identity(3)])
    assert rep.generating_set == [T(2, 3, 1)]
    assert rep.is_irredundant


def test_greedy_single_element():
    rep = greedy([T(1, 1, 1)])
    assert rep.generating_set == [T(1, 1, 1)] and rep.size == 1


def test_greedy_rejects_non_semigroup():
    with pytest.raises(InvalidInputError):
        greedy([T(2, 3, 1)])
    with pytest.raises(InvalidInputError):
        greedy([])


def test_greedy_generates_everything(rng):
    for _ in range(20):
        t = closure([random_transformation(rng, 4) for _ in range(2)])
        els = t.elements[:]
        rng.shuffle(els)
        rep = greedy(els)
        assert set(closure(rep.generating_set).elements) == set(els)
        # each pick was outside the closure of the earlier picks
        for i in range(1, rep.size):
            assert rep.generating_set[i] not in set(closure(rep.generating_set[:i]).elements)


# small_generating_set

def test_smallgen_full_t3(full_t3):
    # lexicographic order inside the group of units puts the identity first,
    # so the output is one larger than the rank
    rep = small_generating_set(full_t3, 'descending')
    assert rep.generating_set == [T(1, 2, 3), T(1, 3, 2), T(2, 1, 3), T(1, 1, 2)]
    assert rep.size == 4 and not rep.is_irredundant
    assert rep.element_order == 'descending' and rep.algorithm == 'smallgen'
    assert semigroup_rank(full_t3) == 3


def test_smallgen_is_greedy_over_ordered_elements(full_t3, rng):
    tables = [full_t3] + [closure([random_transformation(rng, 4) for _ in range(2)])
                          for _ in range(10)]
    for t in tables:
        for d in ('descending', 'ascending'):
            expected = greedy(ordered_elements(t, direction=d)).generating_set
            assert small_generating_set(t, d).generating_set == expected


def test_smallgen_group_and_band(left_zero3):
    g = closure([T(2, 3, 1, 4), T(2, 1, 3, 4)])
    assert small_generating_set(g).generating_set == greedy(sorted(g.elements)).generating_set
    rep = small_generating_set(left_zero3)
    assert rep.size == 3 and rep.is_irredundant


# is_irredundant

def test_is_irredundant_examples():
    assert not is_irredundant([identity(3), T(2, 3, 1)])
    assert is_irredundant([T(2, 3, 1)])
    assert is_irredundant([T(2, 1, 3), T(2, 3, 1), T(1, 1, 3)])
    assert not is_irredundant([T(2, 3, 1), T(3, 1, 2)])


def test_is_irredundant_oracle(rng):
    for _ in range(30):
        gens = [random_transformation(rng, 4) for _ in range(3)]
        full = set(closure(gens).elements)
        expected = all(set(closure(gens[:i] + gens[i + 1:]).elements) != full
                       for i in range(3))
        assert is_irredundant(gens) is expected


# sufficient condition

def test_sufficient_condition_examples():
    assert not satisfies_sufficient_condition([T(2, 3, 1), T(1, 1, 2)])
    assert not satisfies_sufficient_condition([T(1, 1, 1)])
    x = [T(1, 1, 2), T(2, 2, 3)]
    brute = all(rank(compose(compose(a, b), c)) < rank(b) for a, b, c in product(x, repeat=3))
    assert satisfies_sufficient_condition(x) is brute


def test_sufficient_condition_oracle(rng):
    for _ in range(200):
        x = [random_transformation(rng, 5) for _ in range(rng.randint(1, 3))]
        brute = all(rank(compose(compose(a, b), c)) < rank(b)
                    for a, b, c in product(x, repeat=3))
        assert satisfies_sufficient_condition(x) is brute


# rank

@pytest.mark.parametrize('gens, r', [
    ([T(2, 3, 1)], 1),
    ([T(2, 1, 3), T(2, 3, 1), T(1, 1, 3)], 3),
    ([T(1, 1, 1), T(2, 2, 2), T(3, 3, 3)], 3),
    ([T(1, 1, 1)], 1),
])
def test_rank_examples(gens, r):
    assert semigroup_rank(closure(gens)) == r


def test_rank_oracle(rng):
    for _ in range(15):
        t = closure([random_transformation(rng, 3) for _ in range(3)])
        assert semigroup_rank(t) == naive_rank(t)


def test_rank_ceiling(full_t3):
    with pytest.raises(ResourceLimitError):
        semigroup_rank(full_t3, ceiling=10)
    with pytest.raises(ResourceLimitError):
        semigroup_rank(full_t3, deadline=0.0)


def test_monoid_rank(full_t3, cyclic3):
    assert monoid_rank(full_t3) == 3
    assert monoid_rank(closure(symmetric_group(3)[1:])) == 2
    assert monoid_rank(cyclic3) == 1
    assert monoid_rank(closure([identity(3)])) == 0
    band = closure([T(1, 1, 1), T(2, 2, 2)])
    assert monoid_rank(band) == semigroup_rank(band) == 2


# enumeration and ubiquity

def test_enumeration_examples(cyclic3, left_zero3):
    assert enumerate_irredundant_generating_sets(cyclic3) == [[T(2, 3, 1)], [T(3, 1, 2)]]
    assert enumerate_irredundant_generating_sets(left_zero3) == [
        [T(1, 1, 1), T(2, 2, 2), T(3, 3, 3)]]
    assert enumerate_irredundant_generating_sets(closure([T(1, 1, 1)])) == [[T(1, 1, 1)]]


def test_enumeration_oracle(rng):
    tables = [closure([T(2, 3, 4, 1)]), closure(symmetric_group(3)[1:])]
    for _ in range(12):
        t = closure([random_transformation(rng, 3) for _ in range(2)])
        if len(t) <= 12:
            tables.append(t)
    for t in tables:
        assert enumerate_irredundant_generating_sets(t) == naive_irredundant_sets(t)


def test_ubiquity_examples(cyclic3):
    assert is_ubiquitous(cyclic3)
    assert is_ubiquitous(closure([T(1, 1, 1)]))
    c4 = closure([T(2, 3, 4, 1)])
    sizes = {len(s) for s in naive_irredundant_sets(c4)}
    assert is_ubiquitous(c4) is (len(sizes) == 1)
    # S_3: a transposition plus the 3-cycle, or two transpositions
    assert is_ubiquitous(closure(symmetric_group(3)[1:]))
    # the cyclic group of order 6 has generating sets {g} and {g^2, g^3}
    c6 = closure([T(2, 3, 1, 5, 4)])
    assert len(c6) == 6 and not is_ubiquitous(c6)


def test_enumeration_ceiling(full_t3):
    with pytest.raises(ResourceLimitError):
        enumerate_irredundant_generating_sets(full_t3, ceiling=20)


def test_rank_drop_random_tables(rng):
    """Under the rank-drop condition the ordered greedy output is irredundant and optimal."""
    hits = 0
    for _ in range(300):
        n = rng.choice([4, 5])
        gens = [random_transformation(rng, n) for _ in range(rng.choice([2, 3]))]
        if not satisfies_sufficient_condition(gens):
            continue
        hits += 1
        t = closure(gens)
        rep = small_generating_set(t)
        assert is_irredundant(rep.generating_set)
        if len(t) <= 40:
            assert rep.size == semigroup_rank(t)
    assert hits > 0


def test_report_dict(cyclic3):
    # the identity sorts first within the single class
    d = small_generating_set(cyclic3).to_dict()
    assert d['generating_set'] == ['[1,2,3]', '[2,3,1]'] and d['size'] == 2
    assert d['is_irredundant'] is False
    assert d['semigroup_size'] == 3
