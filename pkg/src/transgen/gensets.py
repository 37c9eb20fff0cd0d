"""Generating sets: Greedy, SmallGeneratingSet, irredundancy, rank, ubiquity.

Exhaustive searches (:func:`semigroup_rank`,
:func:`enumerate_irredundant_generating_sets`) work on a dense
multiplication table of the semigroup and represent subsets as Python int
bitmasks.
"""

from dataclasses import dataclass, asdict
from itertools import combinations
import time

from .errors import InvalidInputError, ResourceLimitError
from .greens import d_classes, normalize_direction, ordered_elements
from .semigroup import closure
from .transform import Transformation, _mult, identity

__all__ = [
    'GenSetReport',
    'greedy',
    'small_generating_set',
    'is_irredundant',
    'semigroup_rank',
    'satisfies_sufficient_condition',
    'enumerate_irredundant_generating_sets',
    'is_ubiquitous',
    'monoid_rank',
    'indecomposable_elements',
    'RANK_CEILING',
    'ENUMERATION_CEILING',
]

RANK_CEILING = 64
ENUMERATION_CEILING = 32


@dataclass
class GenSetReport:
    generating_set: list
    size: int
    is_irredundant: bool
    semigroup_size: int
    algorithm: str
    element_order: str

    def to_dict(self):
        d = asdict(self)
        d['generating_set'] = [str(g) for g in self.generating_set]
        return d


def greedy(element_list, element_order='given', algorithm='greedy'):
    """Scan ``element_list`` once, keeping every element not yet generated.

    The list must be exactly the element set of a semigroup; anything else
    is detected when the growing closure leaves the list.
    """
    elements = list(element_list)
    if not elements:
        raise InvalidInputError('empty element list')
    target = set(elements)
    if len(target) != len(elements):
        raise InvalidInputError('element list has repeated entries')
    gens = []
    table = None
    for s in elements:
        if table is not None and s in table:
            continue
        gens.append(s)
        old = 0 if table is None else len(table)
        table = closure([s]) if table is None else table.extend(s)
        for e in table.elements[old:]:
            if e not in target:
                raise InvalidInputError(
                    f'element list is not closed: {e} is generated but not listed')
    return GenSetReport(
        generating_set=gens,
        size=len(gens),
        is_irredundant=is_irredundant(gens),
        semigroup_size=len(table),
        algorithm=algorithm,
        element_order=element_order,
    )


def small_generating_set(table, direction='descending'):
    """Greedy over the elements ordered class by class along the J-order."""
    direction = normalize_direction(direction)
    order = ordered_elements(table, d_classes(table), direction)
    return greedy(order, element_order=direction, algorithm='smallgen')


def is_irredundant(generators):
    gens = list(generators)
    if not gens:
        raise InvalidInputError('empty generating set')
    if len(set(gens)) != len(gens):
        return False
    if len(gens) == 1:
        return True
    for i, g in enumerate(gens):
        if g in closure(gens[:i] + gens[i + 1:]):
            return False
    return True


def satisfies_sufficient_condition(generators):
    """True iff ``rank(xyz) < rank(y)`` for every ``x, y, z`` in the set.

    Triples may repeat elements, so a generator of a cyclic group fails.
    """
    gens = list(generators)
    if not gens:
        raise InvalidInputError('empty generating set')
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise InvalidInputError('generators have mixed degrees')
    imgs = [g._img for g in gens]
    ranks = [len(set(y)) for y in imgs]
    for x in imgs:
        for y, ry in zip(imgs, ranks):
            xy = _mult(x, y)
            if len(set(xy)) == ry:
                # rank(xyz) <= rank(xy) so only these pairs can fail
                for z in imgs:
                    if len(set(_mult(xy, z))) == ry:
                        return False
    return True


# ---------------------------------------------------------------------------
# exhaustive searches over subsets


class _Multiplication:
    """Dense multiplication table of a semigroup, indexed by element position."""

    def __init__(self, table, ceiling, what):
        size = len(table)
        if size > ceiling:
            raise ResourceLimitError(
                f'{what}: semigroup has {size} elements, ceiling is {ceiling}')
        self.elements = table.elements
        index = table.index
        imgs = [e._img for e in self.elements]
        self.prod = [[index[Transformation._raw(_mult(a, b))]
                      for b in imgs] for a in imgs]
        self.size = size
        self.full = (1 << size) - 1

    def close(self, gens):
        """Bitmask of ``<gens>`` for a list of positions."""
        prod = self.prod
        mask = 0
        queue = []
        for g in gens:
            if not mask >> g & 1:
                mask |= 1 << g
                queue.append(g)
        for a in queue:
            row = prod[a]
            for g in gens:
                c = row[g]
                if not mask >> c & 1:
                    mask |= 1 << c
                    queue.append(c)
        return mask

    def decomposable(self):
        mask = 0
        for row in self.prod:
            for c in row:
                mask |= 1 << c
        return mask


def _check_deadline(deadline, what):
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimitError(f'{what}: time budget exhausted')


def indecomposable_elements(table):
    """Elements of ``S \\ S^2``; every generating set contains all of them."""
    mult = _Multiplication(table, float('inf'), 'indecomposable_elements')
    dec = mult.decomposable()
    return [e for i, e in enumerate(table.elements) if not dec >> i & 1]


def semigroup_rank(table, ceiling=RANK_CEILING, deadline=None):
    """Exact size of a smallest generating set.

    Indecomposable elements are forced into every generating set and
    elements they already generate are never needed, so the search runs
    over subsets of the remaining elements in increasing size.
    """
    mult = _Multiplication(table, ceiling, 'semigroup_rank')
    dec = mult.decomposable()
    forced = [i for i in range(mult.size) if not dec >> i & 1]
    base = mult.close(forced)
    if base == mult.full:
        return len(forced)
    cands = [i for i in range(mult.size) if not base >> i & 1]
    for m in range(1, len(cands) + 1):
        for combo in combinations(cands, m):
            if mult.close(forced + list(combo)) == mult.full:
                return len(forced) + m
            _check_deadline(deadline, 'semigroup_rank')
    raise AssertionError('the whole semigroup always generates itself')


def enumerate_irredundant_generating_sets(table, ceiling=ENUMERATION_CEILING,
                                          deadline=None):
    """All irredundant generating sets, each sorted, in lexicographic order.

    Depth-first extension over the elements in lexicographic order.  A
    branch is cut as soon as the new element is already generated or makes
    an earlier choice redundant, since no superset can then be irredundant.
    """
    mult = _Multiplication(table, ceiling, 'enumerate_irredundant_generating_sets')
    elements = table.elements
    dec = mult.decomposable()
    forced = [i for i in range(mult.size) if not dec >> i & 1]
    base = mult.close(forced)
    cands = sorted((i for i in range(mult.size) if not base >> i & 1),
                   key=elements.__getitem__)
    found = []

    def dfs(chosen, mask, start):
        _check_deadline(deadline, 'enumerate_irredundant_generating_sets')
        if mask == mult.full:
            found.append(forced + chosen)
            return
        for idx in range(start, len(cands)):
            c = cands[idx]
            if mask >> c & 1:
                continue
            new = chosen + [c]
            if any(mult.close(forced + new[:j] + new[j + 1:]) >> x & 1
                   for j, x in enumerate(chosen)):
                continue
            dfs(new, mult.close(forced + new), idx + 1)

    dfs([], base, 0)
    result = [sorted(elements[i] for i in s) for s in found]
    result.sort()
    return result


def is_ubiquitous(table, ceiling=ENUMERATION_CEILING, deadline=None):
    sizes = {len(s) for s in
             enumerate_irredundant_generating_sets(table, ceiling, deadline)}
    return len(sizes) == 1


def monoid_rank(table, ceiling=RANK_CEILING, deadline=None):
    """Smallest ``X`` with ``<X> + {1} == S`` when ``S`` contains the identity map.

    Falls back to :func:`semigroup_rank` for semigroups without the
    identity map.  The trivial monoid has monoid rank 0.
    """
    one = identity(table.degree)
    if one not in table:
        return semigroup_rank(table, ceiling, deadline)
    mult = _Multiplication(table, ceiling, 'monoid_rank')
    i_one = table.index[one]
    bit_one = 1 << i_one
    if mult.full == bit_one:
        return 0
    cands = [i for i in range(mult.size) if i != i_one]
    for m in range(1, len(cands) + 1):
        for combo in combinations(cands, m):
            if mult.close(list(combo)) | bit_one == mult.full:
                return m
            _check_deadline(deadline, 'monoid_rank')
    raise AssertionError('the whole semigroup always generates itself')
