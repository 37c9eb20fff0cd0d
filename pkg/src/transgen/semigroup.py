"""Breadth-first enumeration of transformation semigroups.

A :class:`SemigroupTable` records the elements of ``<X>`` in discovery order
together with right and left Cayley edges and one generator word per
element.  The identity of ``S^1`` is never stored; queries that need it
(ideal membership) adjoin it implicitly.
"""

from collections import deque
from functools import cached_property
from operator import itemgetter

from .errors import InvalidInputError
from .transform import Transformation, _mult

__all__ = [
    'SemigroupTable',
    'closure',
    'contains',
    'principal_ideal_membership',
    'evaluate_word',
]


class SemigroupTable:
    """Enumerated semigroup with Cayley graph and witnessing words.

    Attributes
    ----------
    generators : list of Transformation
    elements : list of Transformation
        Distinct elements in discovery order.
    index : dict
        Element -> position in ``elements``.
    right_edges : list of list of int
        ``right_edges[i][j]`` is the position of ``elements[i] * generators[j]``.
    words : list of tuple of int
        Generator indices whose left-to-right product is the element.
    """

    def __init__(self, generators, elements, right_edges, words):
        self.generators = generators
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.right_edges = right_edges
        self.words = words

    @property
    def degree(self):
        return self.generators[0].degree

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f):
        return f in self.index

    def __repr__(self):
        return (f'<SemigroupTable degree={self.degree} '
                f'generators={len(self.generators)} size={len(self)}>')

    @cached_property
    def left_edges(self):
        """``left_edges[i][j]`` is the position of ``generators[j] * elements[i]``."""
        index = self.index
        getters = [itemgetter(*g._img) if g.degree > 1 else None
                   for g in self.generators]
        left = []
        for e in self.elements:
            img = e._img
            row = []
            for g, get in zip(self.generators, getters):
                prod = get(img) if get is not None else (img[g._img[0]],)
                row.append(index[Transformation._raw(prod)])
            left.append(row)
        return left

    def extend(self, g):
        """Return the table of ``<generators + [g]>``.

        Existing elements keep their positions; new elements follow in
        breadth-first order.
        """
        if g.degree != self.degree:
            raise InvalidInputError(
                f'degree mismatch: {g.degree} != {self.degree}')
        gens = self.generators + [g]
        j_new = len(self.generators)
        elements = list(self.elements)
        index = dict(self.index)
        words = list(self.words)
        right = [list(row) for row in self.right_edges]
        queue = deque()

        def discover(img, word):
            f = Transformation._raw(img)
            pos = index.get(f)
            if pos is None:
                pos = len(elements)
                elements.append(f)
                index[f] = pos
                words.append(word)
                right.append([None] * len(gens))
                queue.append(pos)
            return pos

        discover(g._img, (j_new,))
        gimg = g._img
        for i in range(len(self.elements)):
            right[i].append(discover(_mult(elements[i]._img, gimg),
                                     words[i] + (j_new,)))
        while queue:
            i = queue.popleft()
            img = elements[i]._img
            for j, h in enumerate(gens):
                if right[i][j] is None:
                    right[i][j] = discover(_mult(img, h._img), words[i] + (j,))
        table = SemigroupTable.__new__(SemigroupTable)
        table.generators = gens
        table.elements = elements
        table.index = index
        table.right_edges = right
        table.words = words
        return table

    def to_dict(self):
        return {
            'degree': self.degree,
            'generators': [str(g) for g in self.generators],
            'elements': [str(e) for e in self.elements],
            'words': [list(w) for w in self.words],
        }


def _validate_generators(generators):
    gens = list(generators)
    if not gens:
        raise InvalidInputError('need at least one generator')
    for g in gens:
        if not isinstance(g, Transformation):
            raise InvalidInputError(f'not a Transformation: {g!r}')
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise InvalidInputError('generators have mixed degrees')
    return gens


def closure(generators):
    """Enumerate ``<generators>``.

    Elements are discovered level by level in word length.  Within a level,
    candidates are visited by generator index first and parent discovery
    order second, so the element order is fully determined by the input.

    >>> from transgen.transform import Transformation
    >>> len(closure([Transformation([2, 3, 1])]))
    3
    """
    gens = _validate_generators(generators)
    k = len(gens)
    elements = []
    index = {}
    words = []
    right = []

    def discover(img, word):
        f = Transformation._raw(img)
        pos = index.get(f)
        if pos is None:
            pos = len(elements)
            elements.append(f)
            index[f] = pos
            words.append(word)
            right.append([None] * k)
            level.append(pos)
        return pos

    level = []
    for j, g in enumerate(gens):
        discover(g._img, (j,))
    frontier = level
    while frontier:
        level = []
        for j, g in enumerate(gens):
            gimg = g._img
            for i in frontier:
                right[i][j] = discover(_mult(elements[i]._img, gimg),
                                       words[i] + (j,))
        frontier = level
    table = SemigroupTable.__new__(SemigroupTable)
    table.generators = gens
    table.elements = elements
    table.index = index
    table.right_edges = right
    table.words = words
    return table


def contains(table, f):
    if f.degree != table.degree:
        raise InvalidInputError(
            f'degree mismatch: {f.degree} != {table.degree}')
    return f in table.index


def evaluate_word(generators, word):
    """Left-to-right product of ``generators[w]`` for ``w`` in ``word``."""
    img = generators[word[0]]._img
    for j in word[1:]:
        img = _mult(img, generators[j]._img)
    return Transformation._raw(img)


def principal_ideal_membership(table, x, y):
    """True iff ``x`` lies in ``S^1 y S^1``.

    Breadth-first search from ``y`` along left and right Cayley edges.
    """
    try:
        ix = table.index[x]
        iy = table.index[y]
    except KeyError as exc:
        raise InvalidInputError(f'{exc.args[0]} is not in the table') from None
    if ix == iy:
        return True
    right = table.right_edges
    left = table.left_edges
    seen = {iy}
    queue = deque([iy])
    while queue:
        i = queue.popleft()
        for nxt in (*right[i], *left[i]):
            if nxt not in seen:
                if nxt == ix:
                    return True
                seen.add(nxt)
                queue.append(nxt)
    return False
