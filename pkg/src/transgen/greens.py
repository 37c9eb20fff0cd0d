"""D-classes and the J-order of a finite transformation semigroup.

In a finite semigroup D = J, and two elements are J-related exactly when
each is reachable from the other in the combined left/right Cayley graph.
The classes are therefore the strongly connected components of that graph.
"""

from dataclasses import dataclass
import heapq

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InvalidInputError
from .transform import rank

__all__ = ['DClassDecomposition', 'd_classes', 'ordered_elements']

DESCENDING = 'descending'
ASCENDING = 'ascending'
_DIRECTIONS = {DESCENDING: DESCENDING, 'desc': DESCENDING,
               ASCENDING: ASCENDING, 'asc': ASCENDING}


def normalize_direction(direction):
    try:
        return _DIRECTIONS[direction]
    except KeyError:
        raise InvalidInputError(f'unknown direction {direction!r}') from None


@dataclass(frozen=True)
class DClassDecomposition:
    """Partition of a table's elements into D-classes.

    ``order_edges`` holds the transitively closed strict order as pairs
    ``(lower, upper)``.  ``topological_listing`` lists classes maximal
    first with the deterministic tie-break used by :func:`ordered_elements`.
    """

    classes: list
    class_of: list
    ranks: list
    order_edges: frozenset
    topological_listing: list

    def __len__(self):
        return len(self.classes)

    def is_below(self, a, b):
        """Strict order on class indices: ``a < b``."""
        return (a, b) in self.order_edges

    def maximal_classes(self):
        lowers = {a for a, _ in self.order_edges}
        return [c for c in range(len(self.classes)) if c not in lowers]

    def hasse_edges(self):
        """Covering pairs ``(lower, upper)`` of the class order."""
        above = {}
        for a, b in self.order_edges:
            above.setdefault(a, set()).add(b)
        cover = []
        for a, ups in above.items():
            for b in ups:
                if not any(c in ups and (c, b) in self.order_edges for c in ups):
                    cover.append((a, b))
        return sorted(cover)

    def to_dict(self):
        return {
            'classes': [list(c) for c in self.classes],
            'ranks': list(self.ranks),
            'hasse_edges': [list(e) for e in self.hasse_edges()],
            'topological_listing': list(self.topological_listing),
        }


def d_classes(table):
    """Compute the D-classes of ``table`` and their partial order."""
    n_el = len(table)
    rows = []
    cols = []
    for i, (r_row, l_row) in enumerate(zip(table.right_edges, table.left_edges)):
        rows.extend([i] * (len(r_row) + len(l_row)))
        cols.extend(r_row)
        cols.extend(l_row)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                       shape=(n_el, n_el))
    n_comp, labels = connected_components(graph, directed=True,
                                          connection='strong')

    # renumber components by their lexicographically least member
    members = [[] for _ in range(n_comp)]
    for i, lab in enumerate(labels):
        members[lab].append(i)
    elements = table.elements
    for m in members:
        m.sort(key=elements.__getitem__)
    perm = sorted(range(n_comp), key=lambda c: elements[members[c][0]])
    relabel = {old: new for new, old in enumerate(perm)}
    classes = [tuple(members[old]) for old in perm]
    class_of = [relabel[lab] for lab in labels]
    ranks = [rank(elements[c[0]]) for c in classes]

    # condensation: an edge u -> v means class(v) <= class(u)
    succ = [set() for _ in classes]
    for i in range(n_el):
        ci = class_of[i]
        for j in (*table.right_edges[i], *table.left_edges[i]):
            cj = class_of[j]
            if cj != ci:
                succ[ci].add(cj)

    # strict down-sets, filled in post-order over the acyclic condensation
    below = [None] * len(classes)
    for c in range(len(classes)):
        stack = [c]
        while stack:
            node = stack[-1]
            if below[node] is not None:
                stack.pop()
                continue
            pending = [s for s in succ[node] if below[s] is None]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            acc = set()
            for s in succ[node]:
                acc.add(s)
                acc |= below[s]
            below[node] = acc

    order = frozenset((low, up) for up in range(len(classes)) for low in below[up])
    listing = _linear_extension(classes, ranks, order, elements)
    return DClassDecomposition(classes, class_of, ranks, order, listing)


def _linear_extension(classes, ranks, order, elements):
    """Maximal classes first; ties by higher rank, then least member."""
    n_up = [0] * len(classes)
    lower_of = [[] for _ in classes]
    for low, up in order:
        n_up[low] += 1
        lower_of[up].append(low)
    key = [(-ranks[c], elements[classes[c][0]], c) for c in range(len(classes))]
    heap = [key[c] for c in range(len(classes)) if n_up[c] == 0]
    heapq.heapify(heap)
    listing = []
    while heap:
        *_, c = heapq.heappop(heap)
        listing.append(c)
        for low in lower_of[c]:
            n_up[low] -= 1
            if n_up[low] == 0:
                heapq.heappush(heap, key[low])
    return listing


def ordered_elements(table, decomposition=None, direction=DESCENDING):
    """Elements listed whole class by whole class along the J-order.

    ``'descending'`` puts maximal classes first; ``'ascending'`` reverses the
    class blocks.  Each block is in lexicographic order.
    """
    direction = normalize_direction(direction)
    if decomposition is None:
        decomposition = d_classes(table)
    listing = decomposition.topological_listing
    if direction == ASCENDING:
        listing = listing[::-1]
    elements = table.elements
    return [elements[i] for c in listing for i in decomposition.classes[c]]
