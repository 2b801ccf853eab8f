"""Mappings ``F(z) = z f(z)`` on the unit ball of C^n (l2) and the polydisk (l-infinity).

Everything is computed from univariate directional jets: for a fixed
direction ``z`` the function ``zeta -> f(zeta z)`` has Taylor coefficients
``d_k = D^k f(0)(z^k) / k!``, and since ``F(zeta z) = zeta z f(zeta z)``,

    D^{k+1} F(0)(z^{k+1}) / (k+1)! = d_k * z.

Seeds are built from one-variable data: ``f(z) = phi(l_u(z))`` where
``zeta phi(zeta)`` is the member of C(Psi) attached to a Schwarz function
``omega``, and ``l_u`` is the supporting functional at a unit vector ``u``.
Along any line, ``1 + zeta h''/h'`` for ``h(zeta) = zeta f(zeta z0)`` equals
``Psi(omega(zeta l_u(z0)))`` with ``|l_u(z0)| <= 1``, which is how the seeds
inherit the M_Psi condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .bounds import sharp_bound_t23
from .psi import PsiTarget
from .schwarz import SchurParams, SchwarzJet, schwarz_series
from .series import (DEFAULT_ORDER, TruncatedSeries, compose, exp_series, integrate0)

NORMS = ("l2", "linf")
MAX_ORDER = 256
# relative width of a tie for the largest coordinate
TIE_TOL = 1e-12


def norm_of(norm: str, z) -> float:
    z = np.asarray(z, dtype=complex)
    if norm == "l2":
        return float(np.linalg.norm(z))
    if norm == "linf":
        return float(np.max(np.abs(z)))
    raise ValueError(f"unknown norm {norm!r}; expected one of {NORMS}")


def max_coordinate(z) -> int:
    """Index ``k`` with ``|z_k| = max_j |z_j|``; a tie is an error."""
    a = np.abs(np.asarray(z, dtype=complex))
    k = int(np.argmax(a))
    if np.sum(a >= a[k] * (1 - TIE_TOL)) > 1:
        raise ValueError(f"largest coordinate of {z} is not unique")
    return k


def functional_lz(norm: str, z, w) -> complex:
    """A norm-one functional ``l_z`` with ``l_z(z) = ||z||``, applied to ``w``.

    l2: ``<w, z> / ||z||``.  l-infinity: ``w_k conj(z_k) / |z_k|`` at the
    unique largest coordinate ``k`` of ``z``.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    nz = norm_of(norm, z)
    if nz == 0:
        raise ValueError("l_z is undefined at z = 0")
    if norm == "l2":
        return complex(np.vdot(z, w) / nz)
    k = max_coordinate(z)
    return complex(w[k] * np.conj(z[k]) / abs(z[k]))


@dataclass(frozen=True)
class DirectionalJet:
    direction: np.ndarray
    fjet: TruncatedSeries

    def __post_init__(self):
        if abs(self.fjet[0] - 1) > 1e-12:
            raise ValueError("f(0) must be 1")

    @property
    def order(self) -> int:
        return self.fjet.order

    def homogeneous(self, k: int) -> np.ndarray:
        """``D^k F(0)(z^k) / k!`` as a vector."""
        return self.fjet[k - 1] * self.direction


def phi_from_omega(psi: PsiTarget, omega: TruncatedSeries) -> TruncatedSeries:
    """``phi`` with ``h = zeta phi`` solving ``1 + zeta h''/h' = Psi(omega)``.

    ``h' = exp int_0 (Psi(omega(t)) - 1)/t dt``; orders are kept exact, so
    ``phi`` comes out with the order of ``omega``.
    """
    n = omega.order
    g = compose(psi.series(n), omega) - 1
    hprime = exp_series(integrate0(g.shift_down()))
    return integrate0(hprime).shift_down()


@dataclass
class SeedMapping:
    """A mapping ``F(z) = z f(z)`` on the unit ball of ``(C^n, norm)``.

    Use the constructors :func:`extremal_ball`, :func:`extremal_polydisk`,
    :func:`schwarz_seed` and :func:`polynomial_seed`.
    """

    kind: str
    norm: str
    n: int
    psi: PsiTarget | None = None
    u: np.ndarray | None = None
    omega: Callable[[int], TruncatedSeries] | None = field(default=None, repr=False)
    poly: dict | None = field(default=None, repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.norm not in NORMS:
            raise ValueError(f"unknown norm {self.norm!r}")
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if self.u is not None:
            self.u = np.asarray(self.u, dtype=complex)
            if self.u.shape != (self.n,):
                raise ValueError(f"u must have shape ({self.n},)")
            if abs(norm_of(self.norm, self.u) - 1) > 1e-12:
                raise ValueError(f"u must have unit {self.norm} norm")
            if self.norm == "linf":
                max_coordinate(self.u)

    @property
    def capacity(self) -> int:
        if self.poly is not None:
            return MAX_ORDER
        if self.psi.max_order is None:
            return MAX_ORDER
        return self.psi.max_order

    def phi(self, order: int) -> TruncatedSeries:
        if order > self.capacity:
            raise ValueError(f"order {order} exceeds series capacity {self.capacity}")
        if order not in self._cache:
            self._cache[order] = phi_from_omega(self.psi, self.omega(order))
        return self._cache[order]

    def lu(self, z) -> complex:
        return functional_lz(self.norm, self.u, z)

    def f(self, z, order: int = 64) -> complex:
        """Truncated evaluation of ``f`` at a point (mostly for inspection)."""
        return complex(directional_jet(self, z, order).fjet(1.0))


def _rotation(order):
    return TruncatedSeries.from_coeffs([0, 1j], order)


def extremal_ball(psi: PsiTarget, u, norm: str = "l2") -> SeedMapping:
    """``f(z) = phi(l_u(z))`` with ``omega(zeta) = i zeta``."""
    u = np.asarray(u, dtype=complex)
    return SeedMapping("extremal_ball", norm, u.size, psi=psi, u=u, omega=_rotation)


def extremal_polydisk(psi: PsiTarget, n: int) -> SeedMapping:
    """``f(z) = phi(z_1)`` on the polydisk, ``omega(zeta) = i zeta``."""
    u = np.zeros(n, dtype=complex)
    u[0] = 1
    return SeedMapping("extremal_polydisk", "linf", n, psi=psi, u=u, omega=_rotation)


def schwarz_seed(psi: PsiTarget, source, u, norm: str = "l2") -> SeedMapping:
    """Seed from a Schwarz function.

    ``source`` is :class:`SchurParams` (exact rational ``omega``), a
    :class:`SchwarzJet` carrying its parameters, or a bare jet, in which case
    ``omega`` is the cubic polynomial ``c1 z + c2 z^2 + c3 z^3``; a bare jet
    gives a true Schwarz function only when that polynomial maps the disk
    into itself.
    """
    if isinstance(source, SchwarzJet) and source.source is not None:
        source = source.source
    if isinstance(source, SchurParams):
        params = source

        def omega(order):
            return schwarz_series(params, order)
    elif isinstance(source, SchwarzJet):
        c = [0, source.c1, source.c2, source.c3]

        def omega(order):
            return TruncatedSeries.from_coeffs(c, order)
    else:
        raise TypeError(f"expected SchurParams or SchwarzJet, got {type(source).__name__}")
    u = np.asarray(u, dtype=complex)
    return SeedMapping("schwarz_seed", norm, u.size, psi=psi, u=u, omega=omega)


def polynomial_seed(coeffs: dict, n: int, norm: str = "linf", psi: PsiTarget | None = None) -> SeedMapping:
    """``f(z) = sum c_alpha z^alpha`` given as ``{exponent tuple: coefficient}``; needs ``c_0 = 1``."""
    poly = {tuple(int(e) for e in k): complex(v) for k, v in coeffs.items()}
    if any(len(k) != n for k in poly):
        raise ValueError(f"exponent tuples must have length {n}")
    if abs(poly.get((0,) * n, 0) - 1) > 1e-14:
        raise ValueError("f(0) must be 1")
    return SeedMapping("polynomial", norm, n, psi=psi, poly=poly)


def directional_jet(m: SeedMapping, z, order: int = DEFAULT_ORDER) -> DirectionalJet:
    z = np.asarray(z, dtype=complex)
    if z.shape != (m.n,):
        raise ValueError(f"z must have shape ({m.n},)")
    if order > m.capacity:
        raise ValueError(f"order {order} exceeds series capacity {m.capacity}")
    if m.poly is not None:
        d = np.zeros(order + 1, dtype=complex)
        for alpha, c in m.poly.items():
            k = sum(alpha)
            if k <= order:
                d[k] += c * np.prod(z ** np.asarray(alpha))
        return DirectionalJet(z, TruncatedSeries(d))
    return DirectionalJet(z, m.phi(order).scale_argument(m.lu(z)))


def t41_functionals(m: SeedMapping, z) -> tuple[complex, complex]:
    """``l_z(D^3F(0)(z^3))/(3! ||z||^3)`` and ``l_z(D^4F(0)(z^4))/(4! ||z||^4)``."""
    jet = directional_jet(m, z, 3)
    nz = norm_of(m.norm, z)
    a3 = functional_lz(m.norm, z, jet.homogeneous(3)) / nz**3
    a4 = functional_lz(m.norm, z, jet.homogeneous(4)) / nz**4
    return a3, a4


class Sides(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


def t41_check(m: SeedMapping, z, tol: float = 1e-9) -> Sides:
    a3, a4 = t41_functionals(m, z)
    lhs = abs(a3**2 - a4**2)
    rhs = sharp_bound_t23(m.psi).bound
    return Sides(lhs, rhs, lhs <= rhs + tol)


def t42_lhs(m: SeedMapping, z) -> float:
    """``max_k |D^4F_k(0)(z^3, V4)/4! - D^3F_k(0)(z^2, V3)/3!|`` with ``V_j = D^jF(0)(z^j)/j!``.

    ``V_j = d_{j-1} z`` is parallel to ``z``, so multilinearity gives
    ``D^jF_k(0)(z^{j-1}, V_j) / j! = d_{j-1} * (V_j)_k``.
    """
    if m.norm != "linf":
        raise ValueError("the polydisk functional needs the l-infinity norm")
    z = np.asarray(z, dtype=complex)
    max_coordinate(z)
    jet = directional_jet(m, z, 3)
    v3, v4 = jet.homogeneous(3), jet.homogeneous(4)
    term4 = jet.fjet[3] * v4
    term3 = jet.fjet[2] * v3
    return float(np.max(np.abs(term4 - term3)))


def t42_rhs(psi: PsiTarget, nz: float) -> float:
    d1, d2, d3 = psi.jet
    return (nz**7 / 576 * (d1**3 + 1.5 * d1 * d2 + d3 / 3) ** 2
            + nz**5 * d1**2 / 36 * (d2 / (2 * d1) + d1) ** 2)


def t42_sides(m: SeedMapping, z, tol: float = 1e-9) -> Sides:
    lhs = t42_lhs(m, z)
    rhs = t42_rhs(m.psi, norm_of("linf", z))
    return Sides(lhs, rhs, lhs <= rhs + tol)


# -- M_Psi condition ------------------------------------------------------------


def quasi_convex_scalar(jet: DirectionalJet) -> complex:
    """``(D^2f(z)(z^2) + 3 Df(z)(z) + f(z)) / (f(z) + Df(z)(z))`` from the jet along ``z``.

    With ``d_k`` the jet coefficients this is
    ``sum (k+1)^2 d_k / sum (k+1) d_k`` evaluated at ``zeta = 1``.
    """
    d = jet.fjet.coeffs
    k1 = np.arange(1, d.size + 1)
    return complex(np.sum(k1**2 * d) / np.sum(k1 * d))


def sample_ball(rng: np.random.Generator, norm: str, n: int, count: int, radius: float = 1.0):
    """Uniform points of the radius-``radius`` ball of ``(C^n, norm)``."""
    if norm == "l2":
        g = rng.normal(size=(count, n)) + 1j * rng.normal(size=(count, n))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        r = radius * rng.uniform(size=(count, 1)) ** (1 / (2 * n))
        return g * r
    r = radius * np.sqrt(rng.uniform(size=(count, n)))
    return r * np.exp(2j * np.pi * rng.uniform(size=(count, n)))


def random_unit(rng: np.random.Generator, norm: str, n: int) -> np.ndarray:
    v = sample_ball(rng, norm, n, 1)[0]
    return v / norm_of(norm, v)


@dataclass
class MpsiReport:
    samples: int
    violations: int
    worst_margin: float
    worst_z: list


def mpsi_sample_check(m: SeedMapping, samples: int = 1000, seed: int = 0,
                      radius: float = 0.8, order: int = 160) -> MpsiReport:
    """Test ``l_z(q(z))/||z|| in Psi(U)`` on random points of the radius-``radius`` ball.

    The scalar is evaluated from a jet of the given order at ``zeta = 1``, so
    ``radius`` must stay inside the region where that jet has converged.
    Membership is decided by pulling the value back through ``Psi``: the
    margin is ``1 - |Psi^{-1}(value)|``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    psi = m.psi
    if psi is None or (psi.evaluator is None and psi.inverse is None):
        raise ValueError("M_Psi check needs a target with an evaluator")
    rng = np.random.default_rng(seed)
    order = min(order, m.capacity)
    pts = sample_ball(rng, m.norm, m.n, samples, radius)
    vals = np.array([quasi_convex_scalar(directional_jet(m, z, order)) for z in pts])
    margin = 1 - np.abs(psi.invert(vals))
    margin = np.where(np.isfinite(margin), margin, -np.inf)
    i = int(np.argmin(margin))
    return MpsiReport(samples, int(np.sum(margin <= 0)), float(margin[i]),
                      [[float(x.real), float(x.imag)] for x in pts[i]])
