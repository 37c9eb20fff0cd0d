"""
Exact probabilities for random transformations
===============================================

Group generators, rank(xyx) = rank(y), and rank(xyz) = rank(y), as exact
rationals, checked against exhaustive counts for small degree.
"""

import math

from transgen import (bound_P, brute_force_G, brute_force_T, brute_force_V,
                      decay_rate_G, exact_G, exact_T, exact_V)

for n in range(1, 5):
    print(n, exact_G(n), exact_T(n), exact_V(n) if n <= 3 else '')

# the formulas and the brute-force counts agree exactly
print(exact_G(6) == brute_force_G(6), exact_T(4) == brute_force_T(4),
      exact_V(3) == brute_force_V(3))

# log(G_n)/n creeps down toward omega - 1
for n in (10, 20, 40, 60, 120):
    print(n, round(math.log(exact_G(n)) / n, 5))
print('limit', round(decay_rate_G(), 5))

# the union lower bound on a k-generated random semigroup being well behaved
for n in (5, 10, 20, 40):
    print(n, [round(float(bound_P(n, k)), 4) for k in (2, 3, 4)])
