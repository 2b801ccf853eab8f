"""
Mappings on the ball and the polydisk
=====================================

F(z) = z f(z) with f(z) = phi(l_u(z)). All derivatives along a direction z
come from the one-variable jet of zeta -> f(zeta z).
"""

import numpy as np
from convex_toeplitz import make_halfplane
from convex_toeplitz.highdim import (extremal_ball, extremal_polydisk, mpsi_sample_check,
                                     t41_check, t41_functionals, t42_sides)

psi = make_halfplane()
u = np.array([0.6, 0.8j])
m = extremal_ball(psi, u)
# on the line through u the normalised functionals are the 1-D extremal values
print("A3, A4 at 0.5u:", t41_functionals(m, 0.5 * u))
print("ball:", t41_check(m, 0.9 * u))

# polydisk: lhs equals r^5 + r^7
p = extremal_polydisk(psi, 2)
for r in (0.1, 0.5, 0.9):
    s = t42_sides(p, [r, 0])
    print(f"r={r}  lhs={s.lhs:.15f}  r^5+r^7={r**5 + r**7:.15f}")

# the quasi-convexity condition, sampled
print(mpsi_sample_check(m, samples=300, seed=0))
