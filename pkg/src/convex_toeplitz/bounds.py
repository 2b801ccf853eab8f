"""The sharp ``|T_{2,3}|`` bound over C(Psi), its hypotheses, and an empirical sharpness search.

The bound is

    (2 Psi'(0)^2 + Psi''(0))^2 / 144
        + (Psi'(0)^3 + 3 Psi'(0) Psi''(0) / 2 + Psi'''(0) / 3)^2 / 576,

certified when ``|Psi''(0) + 2 Psi'(0)^2| >= 2 Psi'(0)`` and the pair
``(r1, r2)`` lies in one of the seven regions below.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from .coeffs import coeffs_from_subordination, t23
from .psi import PsiTarget
from .schwarz import jets_from_gamma, sample_gamma

log = logging.getLogger(__name__)

TIE = 1e-14


@dataclass(frozen=True)
class RegionPoint:
    nu1: complex
    nu2: float

    def __post_init__(self):
        nu2 = complex(self.nu2)
        if nu2.imag != 0:
            raise ValueError(f"nu2 must be real, got {self.nu2!r}")
        object.__setattr__(self, "nu2", nu2.real)
        object.__setattr__(self, "nu1", complex(self.nu1))


def _le(x, y):
    return x <= y + TIE


def _theta1(a, v):
    return _le(a, 0.5) and _le(abs(v), 1)


def _theta2(a, v):
    return (_le(0.5, a) and _le(a, 2) and _le(4 / 27 * (a + 1) ** 3 - (a + 1), v) and _le(v, 1))


def _theta3(a, v):
    return _le(a, 0.5) and _le(v, -1)


def _theta4(a, v):
    return _le(0.5, a) and _le(v, -2 / 3 * (a + 1))


def _theta5(a, v):
    return _le(a, 2) and _le(1, v)


def _theta6(a, v):
    # the region is printed with nu1^2; for real nu1 that is |nu1|^2
    return _le(2, a) and _le(a, 4) and _le((a**2 + 8) / 12, v)


def _theta7(a, v):
    return _le(4, a) and _le(2 / 3 * (a - 1), v)


REGIONS = (_theta1, _theta2, _theta3, _theta4, _theta5, _theta6, _theta7)


def region_member(pt) -> int | None:
    """Smallest ``i`` with ``(nu1, nu2)`` in region ``i`` (1..7), else ``None``.

    Accepts a :class:`RegionPoint` or a ``(nu1, nu2)`` pair.  Only ``|nu1|``
    enters the inequalities.
    """
    if not isinstance(pt, RegionPoint):
        pt = RegionPoint(*pt)
    a, v = abs(pt.nu1), pt.nu2
    for i, inside in enumerate(REGIONS, start=1):
        if inside(a, v):
            return i
    return None


def sample_region(i: int, count: int, rng: np.random.Generator,
                  nu1_max: float = 8.0, nu2_max: float = 10.0) -> list[tuple[float, float]]:
    """``count`` real points of region ``i`` inside ``|nu1| <= nu1_max, |nu2| <= nu2_max``."""
    inside = REGIONS[i - 1]
    out = []
    while len(out) < count:
        a = rng.uniform(0, nu1_max)
        v = rng.uniform(-nu2_max, nu2_max)
        if inside(a, v):
            out.append((a if rng.uniform() < 0.5 else -a, v))
    return out


def lemma2_bound(nu1, nu2) -> float:
    """Bound on ``|c3 + nu1 c1 c2 + nu2 c1^3|`` for real ``(nu1, nu2)`` in the regions.

    It is 1 on regions 1 and 2 and ``|nu2|`` on regions 3..7, which is
    ``max(1, |nu2|)`` throughout.
    """
    if region_member((nu1, nu2)) is None:
        raise ValueError(f"({nu1}, {nu2}) lies outside every region")
    return max(1.0, abs(nu2))


def r_params(p: PsiTarget) -> tuple[float, float]:
    d1, d2, d3 = p.jet
    if d1 == 0:
        raise ZeroDivisionError("Psi'(0) = 0")
    return (3 * d1**2 + 2 * d2) / (2 * d1), (6 * d1**3 + 9 * d1 * d2 + 2 * d3) / (12 * d1)


def r_params_factored(p: PsiTarget) -> tuple[float, float]:
    """Same pair written as ``(1 / 2 Psi'(0)) * (...)``."""
    d1, d2, d3 = p.jet
    if d1 == 0:
        raise ZeroDivisionError("Psi'(0) = 0")
    return (3 * d1**2 + 2 * d2) / (2 * d1), (d1**3 + 3 * d1 * d2 / 2 + d3 / 3) / (2 * d1)


def hypothesis_ok(p: PsiTarget) -> bool:
    d1, d2, _ = p.jet
    return abs(d2 + 2 * d1**2) >= 2 * d1


def a3_bound(p: PsiTarget) -> float:
    d1, d2, _ = p.jet
    return (2 * d1**2 + d2) / 12


def a4_bound(p: PsiTarget) -> float:
    d1, d2, d3 = p.jet
    return (d1**3 + 1.5 * d1 * d2 + d3 / 3) / 24


@dataclass
class BoundReport:
    psi: str
    jet: tuple
    bound: float
    r1: float
    r2: float
    region_index: int | None
    hypothesis_ok: bool
    notes: str = ""

    def to_dict(self):
        d = asdict(self)
        d["jet"] = list(self.jet)
        d["region"] = d.pop("region_index")
        return d


def sharp_bound_t23(p: PsiTarget) -> BoundReport:
    d1, d2, d3 = p.jet
    if d1 == 0:
        raise ZeroDivisionError("Psi'(0) = 0")
    bound = (2 * d1**2 + d2) ** 2 / 144 + (d1**3 + 1.5 * d1 * d2 + d3 / 3) ** 2 / 576
    r1, r2 = r_params(p)
    region = region_member((r1, r2))
    ok = hypothesis_ok(p)
    notes = []
    if not ok:
        notes.append("|Psi''(0) + 2 Psi'(0)^2| < 2 Psi'(0): bound not certified")
    if region is None:
        notes.append("(r1, r2) outside all regions: hypotheses not met, bound not certified")
    elif abs(r2) < 1:
        notes.append("|r2| < 1: the a4 estimate uses |r2| where the coefficient lemma gives 1")
    return BoundReport(p.label, tuple(p.jet), bound, r1, r2, region, ok, "; ".join(notes))


def certified(report: BoundReport) -> bool:
    return report.hypothesis_ok and report.region_index is not None and abs(report.r2) >= 1


# -- sharpness search --------------------------------------------------------


def t23_of_gamma(p: PsiTarget, gamma: np.ndarray) -> np.ndarray:
    """``|T_{2,3}|`` for a ``(k, 3)`` array of Schur parameters."""
    return t23(coeffs_from_subordination(p, jets_from_gamma(gamma)))


def _from_polar(x):
    r = np.clip(x[..., 0::2], 0, 1)
    return r * np.exp(1j * x[..., 1::2])


def _to_polar(g):
    x = np.empty(g.shape[:-1] + (6,))
    x[..., 0::2] = np.abs(g)
    x[..., 1::2] = np.angle(g)
    return x


def _refine(objective, x, step=0.25, min_step=1e-9):
    # derivative-free coordinate search with step halving; radii clipped to [0, 1]
    best = objective(_from_polar(x[None]))[0]
    evals = 1
    while step >= min_step:
        moved = False
        for i in range(6):
            trial = np.repeat(x[None], 2, axis=0)
            scale = 1.0 if i % 2 == 0 else np.pi
            trial[0, i] += step * scale
            trial[1, i] -= step * scale
            if i % 2 == 0:
                trial[:, i] = np.clip(trial[:, i], 0, 1)
            vals = objective(_from_polar(trial))
            evals += 2
            k = int(np.argmax(vals))
            if vals[k] > best:
                best, x = vals[k], trial[k]
                moved = True
        if not moved:
            step /= 2
    return x, best, evals


@dataclass
class SearchReport:
    psi: str
    bound: float
    best: float
    gap: float
    best_gamma: list = field(default_factory=list)
    evaluations: int = 0
    hypothesis_ok: bool = True
    region_index: int | None = None

    def to_dict(self):
        d = asdict(self)
        d["best_gamma"] = [[g.real, g.imag] for g in self.best_gamma]
        d["region"] = d.pop("region_index")
        return d


def sharpness_search(p: PsiTarget, budget: int = 100_000, seed: int = 0,
                     starts: int = 8, chunk: int = 50_000) -> SearchReport:
    """Maximise ``|a3^2 - a4^2|`` over Schur parameters.

    ``budget`` uniform random parameter triples are scored; the best
    ``starts`` of them are then polished by coordinate search in polar
    coordinates until the step falls below 1e-9.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    report = sharp_bound_t23(p)
    if not certified(report):
        log.warning("search on %s runs outside the certified hypotheses: %s", p.label, report.notes)

    rng = np.random.default_rng(seed)
    top_vals = np.empty(0)
    top_gamma = np.empty((0, 3), dtype=complex)
    done = 0
    while done < budget:
        k = min(chunk, budget - done)
        g = sample_gamma(rng, k)
        vals = t23_of_gamma(p, g)
        top_vals = np.concatenate([top_vals, vals])
        top_gamma = np.concatenate([top_gamma, g])
        keep = np.argsort(top_vals)[::-1][:starts]
        top_vals, top_gamma = top_vals[keep], top_gamma[keep]
        done += k

    evals = budget
    best, best_x = -np.inf, None

    def objective(g):
        return t23_of_gamma(p, g)

    for g in top_gamma:
        x, val, n = _refine(objective, _to_polar(g))
        evals += n
        if val > best:
            best, best_x = val, x
    gamma = _from_polar(best_x)
    return SearchReport(p.label, report.bound, float(best), float(report.bound - best),
                        [complex(x) for x in gamma], evals, report.hypothesis_ok, report.region_index)


def membership_scan(make, params) -> list[tuple[float, int | None, bool]]:
    """``(param, region_index, hypothesis_ok)`` for each parameter of a family constructor."""
    out = []
    for t in params:
        p = make(t)
        out.append((float(t), region_member(r_params(p)), hypothesis_ok(p)))
    return out
