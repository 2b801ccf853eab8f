"""
Searching for the maximum over Schwarz functions
================================================

Random Schur parameters, then coordinate refinement. The best point found
sits at a unimodular first parameter, i.e. at a rotation omega(z) = e^{it} z.
"""

import numpy as np
from convex_toeplitz import make_order_alpha, sharpness_search

rep = sharpness_search(make_order_alpha(0.5), budget=20_000, seed=0)
print("bound", rep.bound)
print("best ", rep.best)
print("gap  ", rep.gap)
# the argument of gamma_0 is +-pi/2 up to the symmetry of the problem
g0 = rep.best_gamma[0]
print("|gamma_0| =", abs(g0), " arg/pi =", np.angle(g0) / np.pi)
