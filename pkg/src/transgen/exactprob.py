"""Exact values of the random-transformation probabilities G_n, T_n, V_n.

* ``G_n``: probability that ``<x>`` is a group,
* ``T_n``: probability that ``rank(xyx) == rank(y)``,
* ``V_n``: probability that ``rank(xyz) == rank(y)``,

for ``x, y, z`` drawn uniformly from the full transformation monoid of
degree ``n``.  Every closed form is evaluated in integers with a single
final division; values are :class:`fractions.Fraction` in lowest terms.
The ``brute_force_*`` functions count the events directly and serve as
independent oracles.
"""

from fractions import Fraction
from math import comb, factorial

import numpy as np

from ._batch import all_transformations, compose_rows, group_mask, rank_rows
from .errors import InvalidInputError, ResourceLimitError

__all__ = [
    'stirling2',
    'stirling2_table',
    'binomial',
    'exact_G',
    'exact_T',
    'exact_V',
    'bound_P',
    'brute_force_G',
    'brute_force_T',
    'brute_force_V',
    'BRUTE_FORCE_LIMITS',
    'fraction_to_decimal',
]

BRUTE_FORCE_LIMITS = {'G': 7, 'T': 4, 'V': 3}


def stirling2_table(n):
    """Rows ``0..n`` of the Stirling triangle of the second kind."""
    rows = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
        rows.append(row)
    return rows


def stirling2(n, k):
    """Number of partitions of an ``n``-set into ``k`` nonempty blocks."""
    if n < 0 or k < 0 or k > n:
        raise InvalidInputError(f'stirling2 needs 0 <= k <= n, got n={n}, k={k}')
    return stirling2_table(n)[n][k]


def binomial(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_n(n):
    if n < 1:
        raise InvalidInputError(f'degree must be >= 1, got {n}')


def exact_G(n):
    """``(n!/n^n) * sum_{k<n} (n-k)^k / k!`` as an exact rational."""
    _check_n(n)
    # n!/k! is an integer, so clear the k! denominators before dividing
    total = sum((n - k) ** k * (factorial(n) // factorial(k)) for k in range(n))
    return Fraction(total, n ** n)


def exact_T(n):
    """Double-sum form with no iteration over set partitions."""
    _check_n(n)
    S = stirling2_table(n)
    C = comb
    total = 0
    for r in range(1, n + 1):
        x_choices = C(n, r) * factorial(r)
        for k in range(1, r + 1):
            inner = sum(C(n, s) * S[n - s][r - k] * C(s, k) * k ** (s - k)
                        for s in range(k, n + k - r + 1))
            total += x_choices * S[r][k] * factorial(k) * k ** (n - r) * inner
    return Fraction(total, n ** (2 * n))


def exact_V(n):
    """Count triples by the ranks ``r, k, t`` of ``x, z, y``.

    The rank ``k`` of ``z`` runs over ``1..n`` and the kernel-class sum of
    ``z`` is collapsed with the same double-sum identity used for ``T_n``.
    """
    _check_n(n)
    S = stirling2_table(n)
    C = comb
    fact = [factorial(i) for i in range(n + 1)]
    total = 0
    for r in range(1, n + 1):
        x_choices = S[n][r] * C(n, r) * fact[r]
        for k in range(1, n + 1):
            z_choices = C(n, k) * fact[k]
            for t in range(1, min(r, k) + 1):
                inner = sum(C(n, s) * S[n - s][k - t] * C(s, t) * t ** (s - t)
                            for s in range(t, n + t - k + 1))
                total += (x_choices * z_choices * S[r][t] * fact[t]
                          * t ** (n - r) * inner)
    return Fraction(total, n ** (3 * n))


def bound_P(n, k):
    """``1 - k G_n - k(k-1) T_n - k(k-1)(k-2) V_n``.

    Lower bound for the probability that ``k`` uniform transformations
    satisfy the rank-drop condition.  Not clamped; it is negative for
    small ``n``.
    """
    if k < 1:
        raise InvalidInputError(f'k must be >= 1, got {k}')
    value = 1 - k * exact_G(n)
    if k >= 2:
        value -= k * (k - 1) * exact_T(n)
    if k >= 3:
        value -= k * (k - 1) * (k - 2) * exact_V(n)
    return value


def _check_budget(quantity, n, max_n):
    _check_n(n)
    limit = BRUTE_FORCE_LIMITS[quantity] if max_n is None else max_n
    if n > limit:
        raise ResourceLimitError(
            f'brute_force_{quantity}: n={n} exceeds budget n<={limit}')


def brute_force_G(n, max_n=None):
    _check_budget('G', n, max_n)
    a = all_transformations(n)
    return Fraction(int(np.count_nonzero(group_mask(a))), n ** n)


def brute_force_T(n, max_n=None):
    _check_budget('T', n, max_n)
    a = all_transformations(n)
    ranks = rank_rows(a)
    hits = 0
    for x in a:
        xs = np.broadcast_to(x, a.shape)
        xyx = compose_rows(compose_rows(xs, a), xs)
        hits += int(np.count_nonzero(rank_rows(xyx) == ranks))
    return Fraction(hits, n ** (2 * n))


def brute_force_V(n, max_n=None):
    _check_budget('V', n, max_n)
    a = all_transformations(n)
    m = len(a)
    hits = 0
    # ys over rows, zs over columns of a 2-d grid, one x at a time
    ys = np.repeat(a, m, axis=0)
    zs = np.tile(a, (m, 1))
    rank_y = rank_rows(ys)
    for x in a:
        xs = np.broadcast_to(x, ys.shape)
        xyz = compose_rows(compose_rows(xs, ys), zs)
        hits += int(np.count_nonzero(rank_rows(xyz) == rank_y))
    return Fraction(hits, n ** (3 * n))


def fraction_to_decimal(value, digits=12):
    """Fixed-point string of ``value`` rounded half away from zero."""
    value = Fraction(value)
    sign = '-' if value < 0 else ''
    value = abs(value)
    scaled = value.numerator * 10 ** digits
    q, rem = divmod(scaled, value.denominator)
    if 2 * rem >= value.denominator:
        q += 1
    whole, frac = divmod(q, 10 ** digits)
    if digits == 0:
        return f'{sign}{whole}'
    return f'{sign}{whole}.{frac:0{digits}d}'
