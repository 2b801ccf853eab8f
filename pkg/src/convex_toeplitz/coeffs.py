"""Taylor coefficients of members of C(Psi) and Toeplitz determinants built from them.

A member ``f(z) = z + a2 z^2 + a3 z^3 + ...`` satisfies
``1 + z f''(z)/f'(z) = P(z)`` with ``P = Psi o omega``.  Comparing
coefficients of ``z^(n-1)`` gives the recurrence

    n (n - 1) a_n = sum_{k=1}^{n-1} k a_k p_{n-k},    a_1 = 1,

which is the reference path here; the closed forms for ``a3`` and ``a4`` are
kept alongside as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .psi import PsiTarget
from .schwarz import SchwarzJet


@dataclass(frozen=True)
class CoefficientVector:
    a2: complex
    a3: complex
    a4: complex

    def as_sequence(self):
        """``(a1, a2, a3, a4)`` with the normalisation ``a1 = 1``."""
        return (1.0, self.a2, self.a3, self.a4)


def solve_recurrence(p: Sequence, n_max: int | None = None) -> list:
    """``[a_1, ..., a_{n_max}]`` from ``p = (p_1, p_2, ...)``.

    ``p_k`` may be numpy arrays (batched); ``n_max`` defaults to ``len(p) + 1``.
    """
    n_max = len(p) + 1 if n_max is None else n_max
    if n_max > len(p) + 1:
        raise ValueError(f"a_{n_max} needs p_1..p_{n_max - 1}, only {len(p)} given")
    a = [1.0]
    for n in range(2, n_max + 1):
        a.append(sum(k * a[k - 1] * p[n - k - 1] for k in range(1, n)) / (n * (n - 1)))
    return a


def subordination_p(psi: PsiTarget, j: SchwarzJet):
    """``(p1, p2, p3)`` of ``Psi(omega(z)) - 1``."""
    d1, d2, d3 = psi.jet
    c1, c2, c3 = j.c1, j.c2, j.c3
    return (d1 * c1,
            d1 * c2 + d2 * c1**2 / 2,
            d1 * c3 + d2 * c1 * c2 + d3 * c1**3 / 6)


def coeffs_from_subordination(psi: PsiTarget, j: SchwarzJet) -> CoefficientVector:
    _, a2, a3, a4 = solve_recurrence(subordination_p(psi, j))
    return CoefficientVector(a2, a3, a4)


def a3_closed_form(psi: PsiTarget, j: SchwarzJet):
    d1, d2, _ = psi.jet
    if d1 == 0:
        raise ZeroDivisionError("Psi'(0) = 0")
    return d1 / 6 * (j.c2 + (d1 + d2 / (2 * d1)) * j.c1**2)


def a4_closed_form(psi: PsiTarget, j: SchwarzJet):
    from .bounds import r_params

    r1, r2 = r_params(psi)
    return psi.psi1 / 12 * (j.c3 + r1 * j.c1 * j.c2 + r2 * j.c1**3)


def toeplitz_matrix(coeffs: Sequence, m: int, n: int) -> np.ndarray:
    """The ``m x m`` symmetric Toeplitz matrix with first row ``(a_n, ..., a_{n+m-1})``.

    ``coeffs`` lists ``a_1, a_2, ...`` (index 0 holds ``a_1``); a
    :class:`CoefficientVector` is expanded with ``a_1 = 1``.
    """
    if isinstance(coeffs, CoefficientVector):
        coeffs = coeffs.as_sequence()
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if len(coeffs) < n + m - 1:
        raise ValueError(f"T_{{{m},{n}}} needs a_{n}..a_{n + m - 1}, got a_1..a_{len(coeffs)}")
    row = np.asarray(coeffs[n - 1 : n + m - 1], dtype=complex)
    i = np.arange(m)
    return row[np.abs(i[:, None] - i[None, :])]


def toeplitz_det(coeffs: Sequence, m: int, n: int) -> complex:
    t = toeplitz_matrix(coeffs, m, n)
    if m == 1:
        return complex(t[0, 0])
    if m == 2:
        return complex(t[0, 0] ** 2 - t[0, 1] ** 2)
    if m == 3:
        a, b, c = t[0]
        return complex(a**3 - 2 * a * b**2 + 2 * b**2 * c - a * c**2)
    return complex(np.linalg.det(t))


def t23(v: CoefficientVector):
    """``|T_{2,3}(f)| = |a3^2 - a4^2|``."""
    return np.abs(v.a3**2 - v.a4**2)
