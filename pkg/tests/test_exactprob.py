from fractions import Fraction
from itertools import product
from math import comb, exp, factorial, pi, prod, sqrt

import pytest
from sympy.utilities.iterables import multiset_partitions

from transgen.errors import InvalidInputError, ResourceLimitError
from transgen.exactprob import (binomial, bound_P, brute_force_G, brute_force_T,
                                brute_force_V, exact_G, exact_T, exact_V,
                                fraction_to_decimal, stirling2, stirling2_table)
from transgen.transform import (compose, full_transformation_monoid,
                                is_group_generator, rank)


def slow_G(n):
    t = full_transformation_monoid(n)
    return Fraction(sum(map(is_group_generator, t)), len(t))


def slow_T(n):
    t = full_transformation_monoid(n)
    hits = sum(rank(compose(compose(x, y), x)) == rank(y) for x, y in product(t, repeat=2))
    return Fraction(hits, len(t) ** 2)


def slow_V(n):
    t = full_transformation_monoid(n)
    hits = sum(rank(compose(compose(x, y), z)) == rank(y)
               for x, y, z in product(t, repeat=3))
    return Fraction(hits, len(t) ** 3)


def test_stirling_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, n) == 1 for n in range(10))
    assert stirling2(10, 3) == 9330
    for bad in [(2, 3), (-1, 0), (3, -1)]:
        with pytest.raises(InvalidInputError):
            stirling2(*bad)


def test_stirling_against_partitions():
    for n in range(1, 8):
        for k in range(1, n + 1):
            count = sum(1 for _ in multiset_partitions(list(range(n)), k))
            assert stirling2(n, k) == count
    table = stirling2_table(6)
    assert table[6][3] == 90


def test_stirling_upper_bound():
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert stirling2(n, k) <= comb(n, k) * k ** (n - k)


def test_binomial():
    assert binomial(3, 2) == 3
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(3, 4) == 0 and binomial(3, -1) == 0


@pytest.mark.parametrize('n', range(1, 9))
def test_idempotent_partition_identity(n):
    for r in range(1, n + 1):
        total = sum(prod(map(len, p)) for p in multiset_partitions(list(range(n)), r))
        assert total == comb(n, r) * r ** (n - r)


def test_binomial_identities():
    for n in range(31):
        for s in range(n + 1):
            for k in range(s + 1):
                C = binomial
                assert C(n, s) * C(s, k) == C(n, k) * C(n - k, n - s)
                for r in range(k, n + 1):
                    assert (C(n - k, n - s) * C(n - s, r - k)
                            == C(n - k, r - k) * C(n - r, s - k))
        for r in range(n + 1):
            for k in range(r + 1):
                assert binomial(n, k) * binomial(n - k, r - k) == binomial(n, r) * binomial(r, k)


def test_exact_examples():
    assert exact_G(1) == exact_T(1) == exact_V(1) == 1
    assert exact_G(3) == Fraction(7, 9)
    assert exact_G(2) == Fraction(1)
    assert exact_T(2) == Fraction(3, 4)
    assert exact_T(4) == Fraction(725, 2048)
    assert exact_V(3) == Fraction(305, 729)
    for f in (exact_G, exact_T, exact_V):
        with pytest.raises(InvalidInputError):
            f(0)


def test_against_pure_python_oracles():
    for n in range(1, 6):
        assert exact_G(n) == slow_G(n)
    for n in range(1, 4):
        assert exact_T(n) == slow_T(n)
    for n in range(1, 3):
        assert exact_V(n) == slow_V(n)


def test_against_vectorised_oracles():
    for n in range(1, 7):
        assert exact_G(n) == brute_force_G(n)
    for n in range(1, 5):
        assert exact_T(n) == brute_force_T(n)
    for n in range(1, 4):
        assert exact_V(n) == brute_force_V(n)


def test_brute_force_limits():
    with pytest.raises(ResourceLimitError):
        brute_force_T(5)
    with pytest.raises(ResourceLimitError):
        brute_force_G(4, max_n=3)


def test_values_in_unit_interval_and_decreasing():
    g = [exact_G(n) for n in range(1, 31)]
    t = [exact_T(n) for n in range(1, 16)]
    v = [exact_V(n) for n in range(1, 10)]
    for seq in (g, t, v):
        assert all(0 < x <= 1 for x in seq)
    # G_1 = G_2 = 1, strict decay afterwards
    assert all(a > b for a, b in zip(g[1:8], g[2:8]))
    assert all(a > b for a, b in zip(t, t[1:]))
    assert all(a > b for a, b in zip(v, v[1:]))


def test_bound_P():
    assert bound_P(1, 3) == -14
    assert bound_P(3, 2) == 1 - 2 * exact_G(3) - 2 * exact_T(3)
    for n in range(1, 8):
        assert bound_P(n, 1) == 1 - exact_G(n)
    # the bound eventually becomes positive
    assert bound_P(25, 2) > 0


def test_stirling_approximation_bounds():
    for n in range(1, 21):
        base = sqrt(2 * pi) * n ** (n + 0.5) * exp(-n)
        f = factorial(n)
        assert base <= f <= base * exp(1 / (2 * n))


def test_fraction_to_decimal():
    assert fraction_to_decimal(Fraction(7, 9)) == '0.777777777778'
    assert fraction_to_decimal(Fraction(1, 8), 2) == '0.13'
    assert fraction_to_decimal(Fraction(-14), 3) == '-14.000'
    assert fraction_to_decimal(Fraction(1, 3), 0) == '0'
    assert float(fraction_to_decimal(exact_G(20), 15)) == pytest.approx(float(exact_G(20)))
