"""Transformations of {1, ..., n}.

Elements act on the right of their argument, so ``compose(f, g)`` maps
``x`` to ``((x)f)g``.  Points are one-based in every external format; the
image tuple is stored zero-based.
"""

from functools import total_ordering
from itertools import permutations, product
from operator import itemgetter
import re

from .errors import InvalidInputError

__all__ = [
    'Transformation',
    'compose',
    'rank',
    'image',
    'kernel',
    'is_idempotent',
    'is_group_generator',
    'is_permutation',
    'inverse',
    'conjugate',
    'identity',
    'constant',
    'full_transformation_monoid',
    'symmetric_group',
    'parse_transformation',
    'parse_generator_line',
]


@total_ordering
class Transformation:
    """An immutable total map on ``{1..degree}``.

    Equality is structural and the order is lexicographic on
    ``(degree, images)``.

    >>> f = Transformation([2, 3, 1])
    >>> f.images
    (2, 3, 1)
    >>> f(1)
    2
    """

    __slots__ = ('_img', '_hash')

    def __init__(self, images):
        img = tuple(int(i) - 1 for i in images)
        n = len(img)
        if n == 0:
            raise InvalidInputError('a transformation needs degree >= 1')
        for i in img:
            if not 0 <= i < n:
                raise InvalidInputError(
                    f'image {i + 1} out of range for degree {n}')
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img):
        # trusted zero-based tuple, no validation
        obj = cls.__new__(cls)
        obj._img = img
        obj._hash = hash(img)
        return obj

    @property
    def degree(self):
        return len(self._img)

    @property
    def images(self):
        """One-based image tuple: ``images[i-1] == (i)f``."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, x):
        return self._img[x - 1] + 1

    def __mul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return (len(self._img), self._img) < (len(other._img), other._img)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f'Transformation({list(self.images)})'

    def __str__(self):
        return '[' + ','.join(map(str, self.images)) + ']'


def _mult(f, g):
    """Product of zero-based image tuples, right action."""
    if len(f) == 1:
        return (g[f[0]],)
    return itemgetter(*f)(g)


def _check_degrees(f, g):
    if f.degree != g.degree:
        raise InvalidInputError(
            f'degree mismatch: {f.degree} != {g.degree}')


def compose(f, g):
    """Return the transformation ``x -> ((x)f)g``."""
    _check_degrees(f, g)
    return Transformation._raw(_mult(f._img, g._img))


def rank(f):
    return len(set(f._img))


def image(f):
    return frozenset(i + 1 for i in f._img)


def kernel(f):
    """Kernel classes of ``f`` as a sorted list of sorted tuples."""
    blocks = {}
    for x, fx in enumerate(f._img, start=1):
        blocks.setdefault(fx, []).append(x)
    return sorted(tuple(b) for b in blocks.values())


def is_idempotent(f):
    return _mult(f._img, f._img) == f._img


def is_group_generator(f):
    """True iff ``<f>`` is a group, i.e. ``f`` permutes its own image."""
    return len(set(_mult(f._img, f._img))) == len(set(f._img))


def is_permutation(f):
    return rank(f) == f.degree


def inverse(p):
    if not is_permutation(p):
        raise InvalidInputError(f'{p} is not a permutation')
    inv = [0] * p.degree
    for x, px in enumerate(p._img):
        inv[px] = x
    return Transformation._raw(tuple(inv))


def conjugate(f, p):
    """Return ``p^-1 f p``; relabels the points of ``f`` along ``p``."""
    _check_degrees(f, p)
    pinv = inverse(p)
    return Transformation._raw(_mult(_mult(pinv._img, f._img), p._img))


def identity(n):
    return Transformation._raw(tuple(range(n)))


def constant(n, c):
    """The constant map of degree ``n`` with value ``c`` (one-based)."""
    if not 1 <= c <= n:
        raise InvalidInputError(f'constant value {c} out of range')
    return Transformation._raw((c - 1,) * n)


def full_transformation_monoid(n):
    """All ``n**n`` transformations of degree ``n`` in lexicographic order."""
    return [Transformation._raw(t) for t in product(range(n), repeat=n)]


def symmetric_group(n):
    return [Transformation._raw(t) for t in permutations(range(n))]


_LITERAL = re.compile(r'\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]')


def parse_transformation(text):
    """Parse a literal such as ``'[2, 3, 1]'``."""
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        raise InvalidInputError(f'not a transformation literal: {text!r}')
    return Transformation(int(tok) for tok in m.group(1).split(','))


def parse_generator_line(line):
    """Parse a whitespace-separated list of literals; ``#`` starts a comment.

    Returns an empty list for blank or comment-only lines.
    """
    line = line.split('#', 1)[0].strip()
    if not line:
        return []
    gens = []
    pos = 0
    for m in _LITERAL.finditer(line):
        if line[pos:m.start()].strip():
            raise InvalidInputError(f'unparseable text in {line!r}')
        gens.append(Transformation(int(tok) for tok in m.group(1).split(',')))
        pos = m.end()
    if line[pos:].strip():
        raise InvalidInputError(f'unparseable text in {line!r}')
    return gens
