import numpy as np
import pytest

from convex_toeplitz.bounds import (RegionPoint, a3_bound, a4_bound, certified, hypothesis_ok,
                                    lemma2_bound, membership_scan, r_params, r_params_factored,
                                    region_member, sample_region, sharp_bound_t23, sharpness_search)
from convex_toeplitz.psi import make_custom, make_halfplane, make_order_alpha, make_strong_beta

ALPHAS = [k / 10 for k in range(10)]
BETAS = [2 / 3, 0.7, 0.8, 0.9, 1.0]


def closed_form_alpha(a):
    return (1 - a) ** 2 * (3 - 2 * a) ** 2 / 9 + (1 - a) ** 2 * (2 - a) ** 2 * (3 - 2 * a) ** 2 / 36


def closed_form_beta(b):
    return b**4 + b**2 * (1 + 17 * b**2) ** 2 / 324


# regions written out again, independently of the module
DISPLAYED = {
    1: lambda a, v: a <= 0.5 and abs(v) <= 1,
    2: lambda a, v: 0.5 <= a <= 2 and 4 / 27 * (a + 1) ** 3 - (a + 1) <= v <= 1,
    3: lambda a, v: a <= 0.5 and v <= -1,
    4: lambda a, v: a >= 0.5 and v <= -2 / 3 * (a + 1),
    5: lambda a, v: a <= 2 and v >= 1,
    6: lambda a, v: 2 <= a <= 4 and v >= (a**2 + 8) / 12,
    7: lambda a, v: a >= 4 and v >= 2 / 3 * (a - 1),
}


def test_region_examples():
    assert region_member(RegionPoint(0, 0)) == 1
    assert region_member((5, 6)) == 7
    assert region_member((0, 2)) == 5
    assert region_member((3, 0)) is None
    assert region_member((-5, 6)) == 7
    with pytest.raises(ValueError):
        RegionPoint(0, 1j)


def test_region_membership_reevaluated(rng):
    pts = np.column_stack([rng.uniform(-6, 6, 20_000), rng.uniform(-8, 8, 20_000)])
    for nu1, nu2 in pts:
        i = region_member((nu1, nu2))
        a = abs(nu1)
        inside = [k for k, pred in DISPLAYED.items() if pred(a, nu2)]
        if i is None:
            assert not inside
        else:
            assert DISPLAYED[i](a, nu2) and i == min(inside)


def test_region_boundary_ties():
    assert region_member((0.5 + 1e-15, 1)) == 1
    assert region_member((4, 2 - 1e-15)) == 6
    assert region_member((4.5, 7 / 3 - 1e-15)) == 7


def test_sample_region(rng):
    for i in range(1, 8):
        for nu1, nu2 in sample_region(i, 20, rng):
            assert DISPLAYED[i](abs(nu1), nu2)


def test_lemma2_bound():
    assert lemma2_bound(0, 0) == 1
    assert lemma2_bound(5, 6) == 6
    with pytest.raises(ValueError):
        lemma2_bound(3, 0)


def test_r_params_examples():
    assert r_params(make_halfplane()) == pytest.approx((5, 6))
    assert r_params(make_order_alpha(0.5)) == pytest.approx((3.5, 3))
    assert r_params(make_strong_beta(1)) == pytest.approx((5, 6))
    with pytest.raises(ZeroDivisionError):
        r_params(make_custom(0, 1, 1))


def test_r_params_forms_agree(rng):
    targets = [make_order_alpha(a) for a in ALPHAS] + [make_strong_beta(b) for b in np.linspace(0.1, 1, 10)]
    targets += [make_custom(*x) for x in np.column_stack([rng.uniform(0.1, 3, 50), rng.normal(size=(50, 2)) * 3])]
    for p in targets:
        assert r_params(p) == pytest.approx(r_params_factored(p), abs=1e-13)


def test_r_params_families():
    for a in ALPHAS:
        s = 1 - a
        assert r_params(make_order_alpha(a)) == pytest.approx((3 * s + 2, (2 * s + 1) * (s + 1)), abs=1e-13)
    for b in BETAS:
        assert r_params(make_strong_beta(b)) == pytest.approx((5 * b, (17 * b**2 + 1) / 3), abs=1e-13)


def test_hypothesis_examples():
    assert hypothesis_ok(make_halfplane())
    assert all(hypothesis_ok(make_order_alpha(a)) for a in ALPHAS)
    assert not hypothesis_ok(make_custom(1, -2.5, 0))


def test_bound_examples():
    rep = sharp_bound_t23(make_halfplane())
    assert rep.bound == 2 and rep.region_index == 7 and rep.hypothesis_ok and certified(rep)
    assert rep.to_dict()["region"] == 7
    for a in ALPHAS:
        assert sharp_bound_t23(make_order_alpha(a)).bound == pytest.approx(closed_form_alpha(a), abs=1e-12)
    for b in BETAS:
        assert sharp_bound_t23(make_strong_beta(b)).bound == pytest.approx(closed_form_beta(b), abs=1e-12)


def test_bound_is_sum_of_coefficient_bounds():
    for p in (make_halfplane(), make_order_alpha(0.2), make_strong_beta(0.9)):
        assert sharp_bound_t23(p).bound == pytest.approx(a3_bound(p) ** 2 + a4_bound(p) ** 2, rel=1e-14)


def test_uncertified_report_has_notes():
    rep = sharp_bound_t23(make_custom(1, -2.5, 0))
    assert not rep.hypothesis_ok and not certified(rep) and rep.notes


def test_family_membership():
    for a in ALPHAS:
        assert region_member(r_params(make_order_alpha(a))) is not None
    for b in BETAS:
        rep = sharp_bound_t23(make_strong_beta(b))
        assert rep.region_index is not None and rep.hypothesis_ok


def test_membership_boundary_is_recorded():
    # the hypothesis gate, not the regions, cuts the strong family off at beta = 1/3
    scan = membership_scan(make_strong_beta, np.linspace(0.05, 1, 20))
    assert all(region is not None for _, region, _ in scan)
    assert [ok for b, _, ok in scan] == [b >= 1 / 3 for b, _, _ in scan]


def test_alpha_bound_decreases_to_zero():
    grid = [0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.99, 0.999]
    vals = [sharp_bound_t23(make_order_alpha(a)).bound for a in grid]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    assert vals[-1] < 1e-5


@pytest.mark.parametrize("p", [make_halfplane(), make_order_alpha(0.5), make_strong_beta(0.8)],
                         ids=lambda p: p.label)
def test_search_small_budget(p):
    rep = sharpness_search(p, budget=5_000, seed=1)
    assert rep.best <= rep.bound + 1e-9
    assert rep.gap <= 1e-6
    assert abs(abs(rep.best_gamma[0]) - 1) < 1e-6
    assert rep.evaluations > 5_000


def test_search_is_deterministic():
    a = sharpness_search(make_order_alpha(0.3), budget=2_000, seed=4)
    b = sharpness_search(make_order_alpha(0.3), budget=2_000, seed=4)
    assert a.to_dict() == b.to_dict()
    with pytest.raises(ValueError):
        sharpness_search(make_halfplane(), budget=0)
