import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from convex_toeplitz.coeffs import (CoefficientVector, a3_closed_form, a4_closed_form,
                                    coeffs_from_subordination, solve_recurrence, t23,
                                    toeplitz_det, toeplitz_matrix)
from convex_toeplitz.psi import make_custom, make_halfplane, make_order_alpha, make_strong_beta
from convex_toeplitz.schwarz import SchurParams, SchwarzJet, jet_from_schur, rotate, sample_batch

H = make_halfplane()


def vec(v):
    return np.array([v.a2, v.a3, v.a4])


def test_subordination_examples():
    assert np.allclose(vec(coeffs_from_subordination(H, SchwarzJet(1, 0, 0))), [1, 1, 1], atol=1e-15)
    assert np.allclose(vec(coeffs_from_subordination(H, SchwarzJet(1j, 0, 0))), [1j, -1, -1j], atol=1e-15)
    for p in (H, make_order_alpha(0.4), make_strong_beta(0.3)):
        assert np.allclose(vec(coeffs_from_subordination(p, SchwarzJet(0, 0, 0))), 0)


def test_closed_form_examples():
    j = SchwarzJet(1j, 0, 0)
    assert a3_closed_form(H, j) == pytest.approx(-1, abs=1e-15)
    assert a4_closed_form(H, j) == pytest.approx(-1j, abs=1e-15)
    assert a3_closed_form(H, SchwarzJet(1, 0, 0)) == pytest.approx(1)
    assert a4_closed_form(H, SchwarzJet(1, 0, 0)) == pytest.approx(1)
    with pytest.raises(ZeroDivisionError):
        a3_closed_form(make_custom(0, 1, 1), j)


def _sympy_coeffs(psi_jet, c, n=4):
    # independent route: f' = exp(int (P - 1)/t), f = int f'
    z = sp.Symbol("z")
    d1, d2, d3 = [sp.nsimplify(x) for x in psi_jet]
    w = sum(sp.nsimplify(ck) * z ** (k + 1) for k, ck in enumerate(c))
    P = 1 + d1 * w + d2 * w**2 / 2 + d3 * w**3 / 6
    g = sp.expand(sp.series((P - 1) / z, z, 0, n).removeO())
    fp = sp.series(sp.exp(sp.integrate(g, z)), z, 0, n).removeO()
    f = sp.expand(sp.integrate(fp, z))
    return [complex(f.coeff(z, k)) for k in range(2, n + 1)]


def test_recurrence_against_sympy_ode():
    cases = [(H, (0.3 + 0.1j, -0.2, 0.05j)), (make_order_alpha(0.5), (0.5, 0.5, -0.25)),
             (make_custom(1.5, -0.7, 2.25), (0.25j, 0.5, 0.125))]
    for p, c in cases:
        got = vec(coeffs_from_subordination(p, SchwarzJet(*c)))
        assert np.allclose(got, _sympy_coeffs(p.jet, c), atol=1e-13)


def test_recurrence_general_order():
    # f = z/(1-z) has a_n = 1 and P = (1+z)/(1-z)
    a = solve_recurrence([2] * 9)
    assert np.allclose(a, 1)
    with pytest.raises(ValueError):
        solve_recurrence([2, 2], 5)


def test_oracle_equivalence_batched():
    jets, _ = sample_batch(4, 2000)
    for p in (H, make_order_alpha(0.7), make_strong_beta(0.2), make_custom(1.3, -3.1, 0.4)):
        v = coeffs_from_subordination(p, jets)
        assert np.max(np.abs(v.a3 - a3_closed_form(p, jets))) < 1e-12
        assert np.max(np.abs(v.a4 - a4_closed_form(p, jets))) < 1e-12


def test_toeplitz_examples():
    assert toeplitz_det([1, 1, 1, 1], 2, 3) == 0
    assert toeplitz_det([1, 0, -1, -1j], 2, 3) == pytest.approx(2)
    # first row (a1, a2, a3) = (1, 1, 1) is the all-ones matrix
    assert toeplitz_det([1, 1, 1], 3, 1) == 0
    t = toeplitz_matrix(CoefficientVector(2, 3, 4), 3, 2)
    assert np.array_equal(t, [[2, 3, 4], [3, 2, 3], [4, 3, 2]])
    with pytest.raises(ValueError):
        toeplitz_det([1, 1], 2, 3)


def test_t31_expansion(rng):
    for _ in range(50):
        a2, a3 = rng.normal(size=2) + 1j * rng.normal(size=2)
        want = 1 - 2 * a2**2 + 2 * a2**2 * a3 - a3**2
        assert toeplitz_det([1, a2, a3], 3, 1) == pytest.approx(want, abs=1e-12)


def test_direct_expansion_matches_lu(rng):
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            c = rng.normal(size=8) + 1j * rng.normal(size=8)
            c[0] = 1
            assert toeplitz_det(c, m, n) == pytest.approx(np.linalg.det(toeplitz_matrix(c, m, n)), abs=1e-12)
    c = rng.normal(size=10)
    assert toeplitz_det(c, 5, 2) == pytest.approx(np.linalg.det(toeplitz_matrix(c, 5, 2)))


def test_t23_examples():
    assert t23(CoefficientVector(0, 1, 1)) == 0
    assert t23(CoefficientVector(0, -1, -1j)) == 2
    assert t23(CoefficientVector(0, 0.5, 0)) == 0.25
    assert t23(CoefficientVector(0, 0.5, 0)) == abs(toeplitz_det(CoefficientVector(0, 0.5, 0).as_sequence(), 2, 3))


cplx = st.complex_numbers(max_magnitude=1)


@settings(max_examples=300, deadline=None)
@given(cplx, cplx, cplx, st.floats(0, 0.99), st.floats(-np.pi, np.pi))
def test_triangle_and_rotation(g0, g1, g2, alpha, theta):
    p = make_order_alpha(alpha)
    j = jet_from_schur(SchurParams((g0, g1, g2)))
    v = coeffs_from_subordination(p, j)
    assert t23(v) <= abs(v.a3) ** 2 + abs(v.a4) ** 2 + 1e-14
    r = coeffs_from_subordination(p, rotate(j, theta))
    e = np.exp(1j * theta)
    assert r.a3 == pytest.approx(v.a3 * e**2, abs=1e-13)
    assert r.a4 == pytest.approx(v.a4 * e**3, abs=1e-13)
