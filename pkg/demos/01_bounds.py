"""
The sharp bound across the three target families
=================================================

The bound depends on Psi only through its first three derivatives at 0.
"""

# the three families are built from their Taylor series
import numpy as np
from convex_toeplitz import make_halfplane, make_order_alpha, make_strong_beta, sharp_bound_t23

rep = sharp_bound_t23(make_halfplane())
print("halfplane:", rep.bound, "r =", (rep.r1, rep.r2), "region", rep.region_index)

# order alpha: the bound shrinks to 0 as alpha -> 1
for a in np.linspace(0, 0.9, 10):
    rep = sharp_bound_t23(make_order_alpha(a))
    print(f"alpha={a:.1f}  bound={rep.bound:.12f}  region={rep.region_index}")

# strongly convex of order beta: below beta = 1/3 the hypothesis on the jet fails
for b in (0.2, 0.3, 1 / 3, 0.5, 2 / 3, 0.8, 1.0):
    rep = sharp_bound_t23(make_strong_beta(b))
    flag = "" if rep.hypothesis_ok else "  (not certified)"
    print(f"beta={b:.4f}  bound={rep.bound:.12f}  region={rep.region_index}{flag}")
