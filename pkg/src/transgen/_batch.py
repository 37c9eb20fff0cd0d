"""Vectorised transformation arithmetic on integer arrays.

A batch is an array whose last axis holds zero-based images.
"""

from itertools import product

import numpy as np


def compose_rows(f, g):
    """Row-wise right-action product: ``out[..., i] = g[..., f[..., i]]``."""
    return np.take_along_axis(g, f, axis=-1)


def rank_rows(a):
    """Number of distinct entries along the last axis."""
    s = np.sort(a, axis=-1)
    return 1 + np.count_nonzero(np.diff(s, axis=-1), axis=-1)


def group_mask(a):
    """True where ``<x>`` is a group, i.e. ``rank(x^2) == rank(x)``."""
    return rank_rows(compose_rows(a, a)) == rank_rows(a)


def all_transformations(n):
    """Every transformation of degree ``n`` as an ``(n**n, n)`` array."""
    return np.array(list(product(range(n), repeat=n)), dtype=np.int64).reshape(-1, n)
