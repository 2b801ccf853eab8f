"""Schwarz functions through their Schur parameters.

Every analytic self-map ``omega`` of the unit disk with ``omega(0) = 0`` is
``z * psi0(z)`` where ``psi0`` is generated by the Schur recursion

    psi_j(z) = (gamma_j + z psi_{j+1}(z)) / (1 + conj(gamma_j) z psi_{j+1}(z)),

with ``|gamma_j| <= 1`` and the recursion stopping at the first unimodular
parameter.  Truncating at depth 3 (``psi_3 = 0``) already reaches every
admissible triple ``(c1, c2, c3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .series import TruncatedSeries, compose, mul, reciprocal

MAX_DEPTH = 3
UNIT_TOL = 1e-15


@dataclass(frozen=True)
class SchurParams:
    gamma: tuple

    def __post_init__(self):
        g = tuple(complex(x) for x in self.gamma)
        if not 1 <= len(g) <= MAX_DEPTH:
            raise ValueError(f"depth must be 1..{MAX_DEPTH}, got {len(g)}")
        if any(abs(x) > 1 + UNIT_TOL for x in g):
            raise ValueError(f"Schur parameters must lie in the closed unit disk: {g}")
        object.__setattr__(self, "gamma", g)

    @property
    def depth(self) -> int:
        return len(self.gamma)

    def padded(self) -> tuple:
        """Parameters up to ``MAX_DEPTH`` with everything after a unimodular one zeroed."""
        out, stopped = [], False
        for g in self.gamma + (0j,) * (MAX_DEPTH - self.depth):
            out.append(0j if stopped else g)
            stopped = stopped or abs(g) >= 1 - UNIT_TOL
        return tuple(out)


@dataclass(frozen=True)
class SchwarzJet:
    """``(c1, c2, c3)`` of a Schwarz function.

    The fields may also be equal-shape numpy arrays; every function in this
    package that takes a jet then works elementwise over the batch.
    """

    c1: complex
    c2: complex
    c3: complex
    source: SchurParams | None = None

    def as_tuple(self):
        return (self.c1, self.c2, self.c3)

    def satisfies_schur_bounds(self, tol=1e-12):
        """``|c1| <= 1`` and ``|c2| <= 1 - |c1|**2`` (elementwise for batches)."""
        a1 = np.abs(self.c1)
        return (a1 <= 1 + tol) & (np.abs(self.c2) <= 1 - a1**2 + tol)

    def __len__(self):
        return np.size(self.c1)

    def __getitem__(self, i):
        return SchwarzJet(complex(np.asarray(self.c1)[i]), complex(np.asarray(self.c2)[i]),
                          complex(np.asarray(self.c3)[i]))


def _closed_form(g0, g1, g2):
    s0 = 1 - np.abs(g0) ** 2
    return g0, s0 * g1, s0 * (g2 * (1 - np.abs(g1) ** 2) - np.conj(g0) * g1**2)


def jet_from_schur(p: SchurParams) -> SchwarzJet:
    g0, g1, g2 = p.padded()
    if abs(g0) >= 1 - UNIT_TOL:
        return SchwarzJet(g0, 0j, 0j, source=p)
    c1, c2, c3 = _closed_form(g0, g1, g2)
    return SchwarzJet(complex(c1), complex(c2), complex(c3), source=p)


def jets_from_gamma(gamma: np.ndarray) -> SchwarzJet:
    """Batched :func:`jet_from_schur` for a ``(count, 3)`` array of parameters."""
    gamma = np.asarray(gamma, dtype=complex)
    return SchwarzJet(*_closed_form(gamma[:, 0], gamma[:, 1], gamma[:, 2]))


def _mobius(gamma: complex, order: int) -> TruncatedSeries:
    # (gamma + w) / (1 + conj(gamma) w)
    num = TruncatedSeries.from_coeffs([gamma, 1], order)
    den = TruncatedSeries.from_coeffs([1, np.conj(gamma)], order)
    return mul(num, reciprocal(den))


def schwarz_series(p: SchurParams, order: int = 8) -> TruncatedSeries:
    """Taylor series of ``omega`` obtained by running the Schur recursion on series."""
    gammas = p.padded()
    z = TruncatedSeries.variable(order)
    psi = TruncatedSeries.constant(0, order)
    for g in reversed(gammas):
        if abs(g) >= 1 - UNIT_TOL:
            psi = TruncatedSeries.constant(g, order)
        else:
            psi = compose(_mobius(g, order), mul(z, psi))
    return mul(z, psi)


def sample_gamma(rng: np.random.Generator, count: int, depth: int = MAX_DEPTH) -> np.ndarray:
    """Uniform points of the closed unit disk, by rejection from the square."""
    out = np.empty(count * depth, dtype=complex)
    filled = 0
    while filled < out.size:
        need = out.size - filled
        x = rng.uniform(-1, 1, size=(2, 2 * need + 16))
        w = (x[0] + 1j * x[1])[x[0] ** 2 + x[1] ** 2 <= 1][:need]
        out[filled : filled + w.size] = w
        filled += w.size
    return out.reshape(count, depth)


def sample_batch(seed: int, count: int) -> tuple[SchwarzJet, np.ndarray]:
    """``count`` random jets as one batched :class:`SchwarzJet`, plus their parameters."""
    if count < 1:
        raise ValueError("count must be >= 1")
    gamma = sample_gamma(np.random.default_rng(seed), count)
    return jets_from_gamma(gamma), gamma


def sample_random(seed: int, count: int) -> list[SchwarzJet]:
    _, gamma = sample_batch(seed, count)
    return [jet_from_schur(SchurParams(tuple(g))) for g in gamma]


def lemma1_functional(j: SchwarzJet, lam) -> np.ndarray | float:
    """``|c2 + lam c1**2|``; bounded by ``max(1, |lam|)``."""
    return np.abs(j.c2 + lam * j.c1**2)


def lemma2_functional(j: SchwarzJet, nu1, nu2) -> np.ndarray | float:
    """``|c3 + nu1 c1 c2 + nu2 c1**3|``; bounded by ``|nu2|`` on the seven regions."""
    return np.abs(j.c3 + nu1 * j.c1 * j.c2 + nu2 * j.c1**3)


def rotate(j: SchwarzJet, theta: float) -> SchwarzJet:
    """Jet of ``omega(exp(i theta) z)``."""
    e = np.exp(1j * theta)
    return SchwarzJet(j.c1 * e, j.c2 * e**2, j.c3 * e**3)


def jet_from_coeffs(c: Sequence[complex]) -> SchwarzJet:
    c = list(c) + [0] * 3
    return SchwarzJet(complex(c[0]), complex(c[1]), complex(c[2]))
