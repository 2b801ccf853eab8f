"""Ma-Minda targets: the functions ``Psi`` that define convex classes by subordination.

A target is stored through its derivatives ``(Psi'(0), Psi''(0), Psi'''(0))``
together with, when known, its full Taylor series, a point evaluator and an
inverse map.  The three named families are

* ``halfplane``      ``(1 + z) / (1 - z)``
* ``order_alpha``    ``(1 + (1 - 2 alpha) z) / (1 - z)``,  ``0 <= alpha < 1``
* ``strong_beta``    ``((1 + z) / (1 - z)) ** beta``,       ``0 < beta <= 1``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable

import numpy as np

from .series import DEFAULT_ORDER, TruncatedSeries, mul, power_series, reciprocal

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class PsiTarget:
    kind: str
    jet: tuple[float, float, float]
    param: float | None = None
    evaluator: Evaluator | None = field(default=None, compare=False, repr=False)
    inverse: Evaluator | None = field(default=None, compare=False, repr=False)
    taylor: Callable[[int], TruncatedSeries] | None = field(default=None, compare=False, repr=False)

    @property
    def psi1(self) -> float:
        return self.jet[0]

    @property
    def psi2(self) -> float:
        return self.jet[1]

    @property
    def psi3(self) -> float:
        return self.jet[2]

    @property
    def label(self) -> str:
        if self.kind == "halfplane":
            return "halfplane"
        if self.kind == "order_alpha":
            return f"alpha:{self.param!r}"
        if self.kind == "strong_beta":
            return f"beta:{self.param!r}"
        return f"custom:{self.jet!r}"

    def series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        """Taylor series of ``Psi`` about 0.

        Targets known only through their jet have order 3 at most.
        """
        if self.taylor is not None:
            return self.taylor(order)
        if order > 3:
            raise ValueError(f"{self.label} only knows its Taylor series through z**3")
        c = [1.0] + [d / factorial(k + 1) for k, d in enumerate(self.jet)]
        return TruncatedSeries.from_coeffs(c, order)

    @property
    def max_order(self) -> int | None:
        """Largest series order available, ``None`` when unlimited."""
        return None if self.taylor is not None else 3

    def __call__(self, z):
        if self.evaluator is None:
            raise ValueError(f"{self.label} has no evaluator")
        return self.evaluator(np.asarray(z, dtype=complex))

    def invert(self, w) -> np.ndarray:
        """Preimage under ``Psi`` of ``w``; a point is in ``Psi(U)`` iff ``|invert(w)| < 1``."""
        w = np.asarray(w, dtype=complex)
        if self.inverse is not None:
            return self.inverse(w)
        if self.evaluator is None:
            raise ValueError(f"{self.label} has neither an inverse nor an evaluator")
        return _newton_inverse(self.evaluator, w)


def _newton_inverse(f: Evaluator, w: np.ndarray, h=1e-7, iters=60) -> np.ndarray:
    # several starts on a polar grid; keep whichever lands closest to w
    starts = np.concatenate([[0], 0.5 * np.exp(2j * np.pi * np.arange(8) / 8),
                             0.9 * np.exp(2j * np.pi * (np.arange(12) + 0.5) / 12)])
    flat = w.reshape(-1)
    best = np.full(flat.shape, np.nan + 0j)
    best_res = np.full(flat.shape, np.inf)
    for s in starts:
        z = np.full(flat.shape, s, dtype=complex)
        for _ in range(iters):
            fz = f(z) - flat
            dz = (f(z + h) - f(z - h)) / (2 * h)
            step = fz / dz
            # keep iterates inside a slightly enlarged disk
            z = z - step
            big = np.abs(z) > 1.5
            z[big] *= 1.5 / np.abs(z[big])
        res = np.abs(f(z) - flat)
        better = res < best_res
        best[better], best_res[better] = z[better], res[better]
    return best.reshape(w.shape)


def _mobius_series(a: float, order: int) -> TruncatedSeries:
    # (1 + a z) / (1 - z)
    return mul(TruncatedSeries.from_coeffs([1, a], order),
               reciprocal(TruncatedSeries.from_coeffs([1, -1], order)))


def _jet_of(s: TruncatedSeries) -> tuple[float, float, float]:
    c = s.coeffs
    return tuple(float(c[k].real) * factorial(k) for k in (1, 2, 3))


def make_halfplane() -> PsiTarget:
    return make_order_alpha(0.0, _kind="halfplane")


def make_order_alpha(alpha: float, _kind: str = "order_alpha") -> PsiTarget:
    alpha = float(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    a = 1 - 2 * alpha

    def taylor(order):
        return _mobius_series(a, order)

    return PsiTarget(
        kind=_kind,
        param=None if _kind == "halfplane" else alpha,
        jet=_jet_of(taylor(3)),
        evaluator=lambda z: (1 + a * z) / (1 - z),
        inverse=lambda w: (w - 1) / (w + a),
        taylor=taylor,
    )


def make_strong_beta(beta: float) -> PsiTarget:
    beta = float(beta)
    if not 0 < beta <= 1:
        raise ValueError(f"beta must lie in (0, 1], got {beta}")

    def taylor(order):
        return power_series(_mobius_series(1.0, order), beta)

    def inverse(w):
        # principal root sends the sector |arg w| < beta pi/2 onto Re > 0
        v = w ** (1 / beta)
        return (v - 1) / (v + 1)

    return PsiTarget(
        kind="strong_beta",
        param=beta,
        jet=_jet_of(taylor(3)),
        evaluator=lambda z: ((1 + z) / (1 - z)) ** beta,
        inverse=inverse,
        taylor=taylor,
    )


def make_custom(psi1: float, psi2: float, psi3: float, *, evaluator: Evaluator | None = None,
                inverse: Evaluator | None = None,
                taylor: Callable[[int], TruncatedSeries] | None = None) -> PsiTarget:
    """A target given by its jet, optionally with evaluator, inverse and full series.

    No admissibility is enforced here; use :func:`admissibility_report`.
    """
    jet = tuple(float(x) for x in (psi1, psi2, psi3))
    if not all(np.isfinite(jet)):
        raise ValueError("jet entries must be finite reals")
    return PsiTarget(kind="custom_jet", jet=jet, evaluator=evaluator, inverse=inverse, taylor=taylor)


def make_disk() -> PsiTarget:
    """``Psi(z) = 1 + z``: the disk of radius 1 about 1, an entire target."""
    return make_custom(1.0, 0.0, 0.0, evaluator=lambda z: 1 + z, inverse=lambda w: w - 1,
                       taylor=lambda order: TruncatedSeries.from_coeffs([1, 1], order))


def parse_psi(text: str) -> PsiTarget:
    """``halfplane``, ``alpha:<v>`` or ``beta:<v>``."""
    text = text.strip()
    if text == "halfplane":
        return make_halfplane()
    name, sep, value = text.partition(":")
    if not sep:
        raise ValueError(f"unknown target {text!r}")
    try:
        v = float(value)
    except ValueError:
        raise ValueError(f"bad parameter in {text!r}") from None
    if name == "alpha":
        return make_order_alpha(v)
    if name == "beta":
        return make_strong_beta(v)
    raise ValueError(f"unknown target {text!r}")


@dataclass
class CheckResult:
    passed: bool
    worst: float
    worst_z: complex | None = None


@dataclass
class AdmissibilityReport:
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())


def _disk_grid(samples: int, rmax=0.995):
    m = max(int(np.sqrt(samples)), 2)
    r = np.linspace(rmax / m, rmax, m)
    t = 2 * np.pi * (np.arange(m) + 0.5) / m
    return (r[:, None] * np.exp(1j * t[None, :])).reshape(-1)


def _worst(values, z):
    i = int(np.argmin(values))
    return float(values[i]), complex(z[i])


def admissibility_report(p: PsiTarget, samples: int = 1000) -> AdmissibilityReport:
    """Sampled check of the standing hypotheses on ``Psi``.

    ``Psi'(0) > 0`` from the jet; on a polar grid of the disk: ``Re Psi > 0``,
    ``Psi(conj z) == conj Psi(z)`` and starlikeness about 1 through
    ``Re[z Psi'(z) / (Psi(z) - 1)] > 0``.  Each entry records the worst
    sampled margin (positive means satisfied).
    """
    if p.evaluator is None:
        raise ValueError(f"{p.label} has no evaluator to sample")
    z = _disk_grid(samples)
    f = p(z)
    checks = {"psi1_positive": CheckResult(p.psi1 > 0, p.psi1)}

    checks["real_part_positive"] = CheckResult(*_as_check(f.real, z))

    asym = np.abs(p(np.conj(z)) - np.conj(f)) / np.maximum(1, np.abs(f))
    i = int(np.argmax(asym))
    checks["real_symmetric"] = CheckResult(bool(asym[i] < 1e-10), float(-asym[i]), complex(z[i]))

    h = 1e-6
    d = (p(z + h) - p(z - h)) / (2 * h)
    with np.errstate(divide="ignore", invalid="ignore"):
        star = (z * d / (f - 1)).real
    star = np.where(np.isfinite(star), star, -np.inf)
    checks["starlike_about_1"] = CheckResult(*_as_check(star, z))
    return AdmissibilityReport(checks)


def _as_check(values, z):
    worst, wz = _worst(values, z)
    return worst > 0, worst, wz
