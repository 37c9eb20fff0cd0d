"""Subsemigroups of the full transformation monoid of degree 3, up to conjugation.

Every nonempty subsemigroup is reached by starting from a monogenic
subsemigroup and repeatedly adjoining one outside element and closing.
Classes are deduplicated by a canonical form: the lexicographically least
sorted element tuple over all conjugates by the symmetric group.
"""

from collections import Counter
from dataclasses import dataclass, field

from .gensets import monoid_rank, semigroup_rank, small_generating_set
from .semigroup import closure
from .errors import InvalidInputError
from .transform import (full_transformation_monoid, identity, inverse,
                        symmetric_group, _mult, Transformation)

__all__ = [
    'Table1Row',
    'PUBLISHED_TABLE1',
    'canonical_form',
    'enumerate_subsemigroups',
    'enumerate_subsemigroups_T3',
    'table1',
    'table1_diff',
]

# rank -> {output size: number of classes}
PUBLISHED_TABLE1 = {
    1: {1: 7, 2: 3, 3: 1},
    2: {2: 32, 3: 25, 4: 11, 5: 3, 6: 1},
    3: {3: 38, 4: 50, 5: 23, 6: 9, 7: 2},
    4: {4: 23, 5: 28, 6: 6, 7: 6},
    5: {5: 5, 6: 7, 7: 2},
}


@dataclass
class Table1Row:
    rank: int
    output_size_histogram: dict = field(default_factory=dict)
    class_count: int = 0

    def to_dict(self):
        return {'rank': self.rank,
                'output_size_histogram': {str(k): v for k, v in
                                          sorted(self.output_size_histogram.items())},
                'class_count': self.class_count}


def _conjugators(n):
    # (p^-1, p) as raw image tuples
    return [(inverse(p)._img, p._img) for p in symmetric_group(n)]


def canonical_form(elements, conjugators=None):
    """Least sorted tuple of raw images among all conjugates of ``elements``."""
    elements = list(elements)
    if conjugators is None:
        conjugators = _conjugators(elements[0].degree)
    best = None
    for pinv, p in conjugators:
        form = tuple(sorted(_mult(_mult(pinv, e._img), p) for e in elements))
        if best is None or form < best:
            best = form
    return best


def enumerate_subsemigroups(n, order=None):
    """One representative per conjugacy class of nonempty subsemigroups.

    Representatives are returned as sorted tuples of transformations (the
    canonical conjugate), ordered by size then lexicographically.  ``order``
    optionally permutes the iteration over the monoid; the result does
    not depend on it.
    """
    monoid = full_transformation_monoid(n) if order is None else list(order)
    conj = _conjugators(n)
    seen = set()
    stack = []
    for t in monoid:
        elems = closure([t]).elements
        key = canonical_form(elems, conj)
        if key not in seen:
            seen.add(key)
            stack.append(elems)
    while stack:
        elems = stack.pop()
        table = closure(elems)
        for t in monoid:
            if t in table:
                continue
            grown = table.extend(t).elements
            key = canonical_form(grown, conj)
            if key not in seen:
                seen.add(key)
                stack.append(grown)
    reps = [tuple(Transformation._raw(img) for img in key) for key in seen]
    reps.sort(key=lambda r: (len(r), r))
    return reps


def enumerate_subsemigroups_T3():
    return enumerate_subsemigroups(3)


def table1(direction='descending', representatives=None, details=False,
           convention='semigroup'):
    """Histogram of SmallGeneratingSet output sizes grouped by rank.

    ``convention='semigroup'`` uses the semigroup rank and counts every
    generator.  ``convention='monoid'`` treats classes containing the
    identity map as monoids: the identity is free, so the rank is the
    monoid rank (at least 1) and the identity is not counted in the output.

    With ``details=True`` also returns one ``(rank, output_size)`` pair per
    representative.
    """
    if convention not in ('semigroup', 'monoid'):
        raise InvalidInputError(f'unknown convention {convention!r}')
    if representatives is None:
        representatives = enumerate_subsemigroups_T3()
    counts = {}
    per_class = []
    for rep in representatives:
        table = closure(list(rep))
        report = small_generating_set(table, direction)
        size = report.size
        if convention == 'monoid' and identity(table.degree) in table:
            r = max(1, monoid_rank(table))
            if size > 1 and identity(table.degree) in report.generating_set:
                size -= 1
        else:
            r = semigroup_rank(table)
        counts.setdefault(r, Counter())[size] += 1
        per_class.append((r, size))
    rows = [Table1Row(r, dict(sorted(c.items())), sum(c.values()))
            for r, c in sorted(counts.items())]
    return (rows, per_class) if details else rows


def table1_diff(rows, published=PUBLISHED_TABLE1):
    """Cell-by-cell comparison with the published grid.

    Returns a list of ``{'rank', 'output_size', 'computed', 'published',
    'delta'}`` records covering every cell present in either grid.
    """
    computed = {row.rank: row.output_size_histogram for row in rows}
    ranks = sorted(set(computed) | set(published))
    diff = []
    for r in ranks:
        c = computed.get(r, {})
        p = published.get(r, {})
        for size in sorted(set(c) | set(p)):
            a, b = c.get(size, 0), p.get(size, 0)
            diff.append({'rank': r, 'output_size': size, 'computed': a,
                         'published': b, 'delta': a - b})
    return diff
