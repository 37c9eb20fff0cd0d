"""Seeded Monte Carlo estimates of G_n, T_n, V_n and of the rank-drop condition.

Randomness comes from numpy's PCG64 bit generator.  Worker ``w`` of ``W``
draws from the ``w``-th child of ``SeedSequence(seed)``, so a run is
reproducible for a fixed ``(seed, workers)`` pair regardless of how the
workers are scheduled.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
import math

import numpy as np

from ._batch import compose_rows, group_mask, rank_rows
from .errors import InvalidInputError
from .transform import Transformation

__all__ = [
    'Estimate',
    'RNG_ALGORITHM',
    'make_rng',
    'random_transformation',
    'random_batch',
    'event_mask',
    'sufficient_condition_mask',
    'estimate',
    'estimate_sufficient',
    'normal_interval',
    'wilson_interval',
]

RNG_ALGORITHM = 'numpy PCG64 / SeedSequence(seed).spawn(workers)'
CHUNK = 1 << 15

_ARITY = {'G': 1, 'T': 2, 'V': 3}
_EVENTS = {
    'G': '<x> is a group',
    'T': 'rank(xyx) == rank(y)',
    'V': 'rank(xyz) == rank(y)',
    'SUFF': 'rank(xyz) < rank(y) for all x, y, z among k generators '
            '(lower-bound event for the ubiquity and SmallGeneratingSet probabilities)',
}


@dataclass
class Estimate:
    quantity: str
    n: int
    k: int
    samples: int
    successes: int
    p_hat: float
    ci95_low: float
    ci95_high: float
    seed: int
    workers: int = 1
    interval: str = 'normal'
    event: str = ''
    rng: str = RNG_ALGORITHM

    def to_dict(self):
        return asdict(self)


def make_rng(seed, worker=0, workers=1):
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed).spawn(workers)[worker]))


def random_transformation(n, rng):
    """Uniform element of the full transformation monoid of degree ``n``."""
    if n < 1:
        raise InvalidInputError(f'degree must be >= 1, got {n}')
    return Transformation._raw(tuple(int(v) for v in rng.integers(0, n, size=n)))


def random_batch(rng, m, k, n):
    """``(m, k, n)`` array of zero-based images, all entries iid uniform."""
    return rng.integers(0, n, size=(m, k, n), dtype=np.int64)


def event_mask(quantity, xs):
    """Per-sample indicator for G, T or V on a batch of shape ``(m, arity, n)``."""
    if quantity == 'G':
        return group_mask(xs[:, 0])
    if quantity == 'T':
        x, y = xs[:, 0], xs[:, 1]
        return rank_rows(compose_rows(compose_rows(x, y), x)) == rank_rows(y)
    if quantity == 'V':
        x, y, z = xs[:, 0], xs[:, 1], xs[:, 2]
        return rank_rows(compose_rows(compose_rows(x, y), z)) == rank_rows(y)
    raise InvalidInputError(f'unknown quantity {quantity!r}')


def sufficient_condition_mask(xs):
    """True where ``rank(x_a x_b x_c) < rank(x_b)`` for all ``a, b, c``."""
    k = xs.shape[1]
    ok = np.ones(xs.shape[0], dtype=bool)
    ranks = [rank_rows(xs[:, b]) for b in range(k)]
    for a in range(k):
        for b in range(k):
            xy = compose_rows(xs[:, a], xs[:, b])
            for c in range(k):
                ok &= rank_rows(compose_rows(xy, xs[:, c])) < ranks[b]
    return ok


def normal_interval(successes, samples, z=1.959963984540054):
    p = successes / samples
    half = z * math.sqrt(p * (1 - p) / samples)
    return max(0.0, p - half), min(1.0, p + half)


def wilson_interval(successes, samples, z=1.959963984540054):
    p = successes / samples
    denom = 1 + z * z / samples
    centre = (p + z * z / (2 * samples)) / denom
    half = z * math.sqrt(p * (1 - p) / samples + z * z / (4 * samples ** 2)) / denom
    return max(0.0, min(p, centre - half)), min(1.0, max(p, centre + half))


def _split(samples, workers):
    base, extra = divmod(samples, workers)
    return [base + (w < extra) for w in range(workers)]


def _count(seed, workers, samples, k, n, indicator):
    def run(w, m):
        rng = make_rng(seed, w, workers)
        hits = 0
        while m > 0:
            size = min(m, CHUNK)
            hits += int(np.count_nonzero(indicator(random_batch(rng, size, k, n))))
            m -= size
        return hits

    shares = _split(samples, workers)
    if workers == 1:
        return run(0, shares[0])
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(run, range(workers), shares))


def _check(n, samples, workers):
    if n < 1:
        raise InvalidInputError(f'degree must be >= 1, got {n}')
    if samples < 1:
        raise InvalidInputError('samples must be >= 1')
    if workers < 1:
        raise InvalidInputError('workers must be >= 1')


def _build(quantity, n, k, samples, hits, seed, workers, interval):
    if interval == 'wilson':
        lo, hi = wilson_interval(hits, samples)
    elif interval == 'normal':
        lo, hi = normal_interval(hits, samples)
    else:
        raise InvalidInputError(f'unknown interval {interval!r}')
    return Estimate(quantity=quantity, n=n, k=k, samples=samples,
                    successes=hits, p_hat=hits / samples, ci95_low=lo,
                    ci95_high=hi, seed=seed, workers=workers,
                    interval=interval, event=_EVENTS[quantity])


def estimate(quantity, n, samples, seed, workers=1, interval='normal'):
    """Estimate ``G_n``, ``T_n`` or ``V_n`` from ``samples`` uniform tuples."""
    if quantity not in _ARITY:
        raise InvalidInputError(f'unknown quantity {quantity!r}')
    _check(n, samples, workers)
    k = _ARITY[quantity]
    hits = _count(seed, workers, samples, k, n,
                  lambda xs: event_mask(quantity, xs))
    return _build(quantity, n, k, samples, hits, seed, workers, interval)


def estimate_sufficient(n, k, samples, seed, workers=1, interval='normal'):
    """Frequency with which ``k`` uniform transformations satisfy the rank-drop condition."""
    if k < 1:
        raise InvalidInputError('k must be >= 1')
    _check(n, samples, workers)
    hits = _count(seed, workers, samples, k, n, sufficient_condition_mask)
    return _build('SUFF', n, k, samples, hits, seed, workers, interval)
