"""
The extremal function
=====================

Solving 1 + z f''/f' = Psi(iz) as a series: a3 comes out real and a4
purely imaginary, so |a3^2 - a4^2| = |a3|^2 + |a4|^2 and the bound is attained.
"""

from convex_toeplitz import build_extremal, make_halfplane, make_strong_beta, verify_attainment

# halfplane: f(z) = z / (1 - iz), so a_n = i^(n-1)
f = build_extremal(make_halfplane(), order=8)
print(f.series.coeffs)

for p in (make_halfplane(), make_strong_beta(0.8)):
    v = build_extremal(p).coefficients
    print(p.label, "a3 =", v.a3, "a4 =", v.a4, verify_attainment(p))
