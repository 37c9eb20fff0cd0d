"""
Small generating sets of transformation semigroups
===================================================

Greedy versus the D-class ordered variant on a few semigroups.
"""

from transgen import (Transformation, closure, d_classes, greedy, is_irredundant,
                      ordered_elements, satisfies_sufficient_condition,
                      semigroup_rank, small_generating_set)

# the full transformation monoid of degree 3 from three generators
t3 = closure([Transformation([2, 1, 3]), Transformation([2, 3, 1]),
              Transformation([1, 1, 3])])
print('size of T_3:', len(t3))

# D-classes line up with rank here: 6 permutations, 18 rank-2 maps, 3 constants
dec = d_classes(t3)
for c in dec.topological_listing:
    print('  class of rank', dec.ranks[c], 'has', len(dec.classes[c]), 'elements')

# Greedy over discovery order, then over the descending D-class order
print('greedy on discovery order:', [str(g) for g in greedy(t3.elements).generating_set])
rep = small_generating_set(t3, 'descending')
print('descending order:', [str(g) for g in rep.generating_set],
      'irredundant' if rep.is_irredundant else 'redundant')
print('rank of T_3:', semigroup_rank(t3))
# the identity sorts first among the permutations, so one extra generator appears
print('first elements in that order:', [str(e) for e in ordered_elements(t3)[:3]])

# a generator set with the rank-drop property on all triples
gens = [Transformation([4, 3, 2, 3]), Transformation([1, 3, 4, 4])]
print('rank-drop condition:', satisfies_sufficient_condition(gens))
s = closure(gens)
rep = small_generating_set(s)
print('semigroup of size', len(s), '-> output', [str(g) for g in rep.generating_set])
print('irredundant:', is_irredundant(rep.generating_set), ' rank:', semigroup_rank(s))
