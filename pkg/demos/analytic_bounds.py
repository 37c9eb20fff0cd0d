"""
Analytic bound functions
========================

Lambert W, the single-variable rate function, and the grid maxima of the
two- and three-variable bound functions.
"""

import json

import numpy as np

from transgen import (F_single, bounds_report, lambert_w, maximize_F_two_var,
                      stationary_point_G)

omega = lambert_w(1.0)
print('omega =', omega, ' check:', omega * np.exp(omega))

xs = np.linspace(0.01, 0.99, 9)
print('F(x):', np.round([F_single(x) for x in xs], 4))
print('F at omega/(1+omega):', F_single(omega / (1 + omega)))

best = maximize_F_two_var(1000)
print('max F(x, y) =', round(best.max_value, 5), 'at', np.round(best.argmax, 4))

alpha, gamma = stationary_point_G()
print('alpha =', alpha, ' gamma =', gamma)

print(json.dumps(bounds_report()['checks'], indent=1))
