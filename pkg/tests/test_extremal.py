import numpy as np
import pytest

from convex_toeplitz.coeffs import coeffs_from_subordination
from convex_toeplitz.extremal import ExtremalFunction, build_extremal, verify_attainment
from convex_toeplitz.psi import make_custom, make_halfplane, make_order_alpha, make_strong_beta
from convex_toeplitz.schwarz import SchwarzJet
from convex_toeplitz.series import TruncatedSeries

FAMILY = ([make_halfplane()] + [make_order_alpha(a) for a in np.linspace(0, 0.9, 10)]
          + [make_strong_beta(b) for b in (2 / 3, 0.7, 0.8, 0.9, 1.0)])


def test_halfplane_values():
    v = build_extremal(make_halfplane()).coefficients
    assert v.a3 == -1 and v.a4 == -1j and v.a2 == 1j


def test_alpha_a3():
    for a in np.linspace(0, 0.9, 10):
        v = build_extremal(make_order_alpha(a)).coefficients
        assert v.a3 == pytest.approx(-(4 * (1 - a) ** 2 + 2 * (1 - a)) / 6, abs=1e-14)


def test_a2_first_step():
    for p in FAMILY:
        assert build_extremal(p).coefficients.a2 == pytest.approx(1j * p.psi1 / 2, abs=1e-15)


def test_same_as_subordination_path():
    for p in FAMILY:
        v = build_extremal(p).coefficients
        w = coeffs_from_subordination(p, SchwarzJet(1j, 0, 0))
        assert np.allclose([v.a2, v.a3, v.a4], [w.a2, w.a3, w.a4], atol=1e-12)


def test_phases():
    for p in FAMILY:
        v = build_extremal(p).coefficients
        assert abs(v.a3.imag) <= 1e-13 * abs(v.a3)
        assert abs(v.a4.real) <= 1e-13 * abs(v.a4)


def test_attainment():
    assert verify_attainment(make_halfplane()) == (2.0, 2.0, 0.0)
    for p in FAMILY:
        assert abs(verify_attainment(p).gap) <= 1e-10


def test_jet_only_target_is_capped():
    f = build_extremal(make_custom(1.0, 2.0, 6.0), order=10)
    assert f.series.order == 4


def test_higher_coefficients_of_halfplane():
    # 1 + z f''/f' = (1 + iz)/(1 - iz) gives f(z) = z / (1 - iz), a_n = i^(n-1)
    f = build_extremal(make_halfplane(), order=10)
    assert np.allclose(f.series.coeffs[1:], [1j ** (n - 1) for n in range(1, 11)], atol=1e-15)


def test_normalisation_enforced():
    with pytest.raises(ValueError):
        ExtremalFunction(TruncatedSeries.from_coeffs([0, 2, 0, 0, 0]), make_halfplane())
