"""The extremal member ``f_Psi`` of C(Psi), defined by ``1 + z f''/f' = Psi(i z)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bounds import sharp_bound_t23
from .coeffs import CoefficientVector, solve_recurrence, t23
from .psi import PsiTarget
from .series import DEFAULT_ORDER, TruncatedSeries


# exact powers of i; complex ** int picks up rounding noise
I_POWERS = np.array([1, 1j, -1, -1j])


@dataclass(frozen=True)
class ExtremalFunction:
    series: TruncatedSeries
    psi: PsiTarget

    def __post_init__(self):
        c = self.series.coeffs
        if abs(c[0]) > 1e-14 or abs(c[1] - 1) > 1e-14:
            raise ValueError("extremal series must start z + ...")

    @property
    def coefficients(self) -> CoefficientVector:
        c = self.series.coeffs
        return CoefficientVector(complex(c[2]), complex(c[3]), complex(c[4]))


def build_extremal(p: PsiTarget, order: int = DEFAULT_ORDER) -> ExtremalFunction:
    """Jet of ``f_Psi`` through ``z**order`` (capped by what ``p`` knows of its series)."""
    if p.max_order is not None:
        order = min(order, p.max_order + 1)
    if order < 4:
        raise ValueError("need at least the z**4 coefficient")
    psi_coeffs = p.series(order - 1).coeffs
    rot = psi_coeffs[1:] * I_POWERS[np.arange(1, psi_coeffs.size) % 4]
    a = solve_recurrence(list(rot), order)
    return ExtremalFunction(TruncatedSeries.from_coeffs([0] + a), p)


class Attainment(NamedTuple):
    bound: float
    attained: float
    gap: float


def verify_attainment(p: PsiTarget) -> Attainment:
    v = build_extremal(p).coefficients
    bound = sharp_bound_t23(p).bound
    attained = float(t23(v))
    return Attainment(bound, attained, bound - attained)
