"""
Coefficient inequalities for Schwarz functions
==============================================

|c2 + lam c1^2| <= max(1, |lam|) holds for every lam. For the cubic functional
|c3 + nu1 c1 c2 + nu2 c1^3| the bound |nu2| holds on the regions far from 0,
but near the origin c3 alone can reach 1, so the bound there is max(1, |nu2|).
"""

import numpy as np
from convex_toeplitz.bounds import sample_region
from convex_toeplitz.schwarz import lemma1_functional, lemma2_functional, sample_batch

jets, _ = sample_batch(0, 50_000)

for lam in (0, 0.5, 2, 1j):
    print(f"lam={lam}: max {lemma1_functional(jets, lam).max():.6f}  <= {max(1, abs(lam))}")

rng = np.random.default_rng(0)
for i in range(1, 8):
    pts = sample_region(i, 10, rng)
    excess = max(float((lemma2_functional(jets, a, v) - abs(v)).max()) for a, v in pts)
    print(f"region {i}: max excess over |nu2| = {excess:+.4f}")

# complex nu1 is outside what the regions control
print("nu1 = 3i, nu2 = 1.4267:", lemma2_functional(jets, 3j, 1.4267).max())
