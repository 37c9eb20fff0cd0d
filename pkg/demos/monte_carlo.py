"""
Monte Carlo estimates
=====================

Sampled frequencies next to the exact values, then the frequency with which
k random transformations satisfy the rank-drop condition.
"""

from transgen import estimate, estimate_sufficient, exact_G, exact_T, exact_V

for q, n, exact in [('G', 10, exact_G), ('T', 4, exact_T), ('V', 3, exact_V)]:
    e = estimate(q, n, 100000, seed=12345)
    print(q, n, round(e.p_hat, 5), (round(e.ci95_low, 5), round(e.ci95_high, 5)),
          'exact', round(float(exact(n)), 5))

# the condition holds almost surely once n is moderately large
for n in (4, 6, 8, 10, 15, 20, 50):
    e = estimate_sufficient(n, 2, 10000, seed=12345, workers=2)
    print('n =', n, ' k = 2:', e.p_hat)
