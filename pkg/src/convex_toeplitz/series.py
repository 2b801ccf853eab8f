"""Truncated complex power series.

A :class:`TruncatedSeries` holds the Taylor coefficients ``c[0], ..., c[N]``
of an analytic function about 0.  ``N`` is the truncation order: every
operation is exact modulo ``z**(N + 1)``, and combining two series gives a
result whose order is the smaller of the two.

    >>> z = TruncatedSeries.variable(4)
    >>> g = reciprocal(1 - z)
    >>> g.coeffs.real
    array([1., 1., 1., 1., 1.])
    >>> exp_series(z).coeffs.real.round(4)
    array([1.    , 1.    , 0.5   , 0.1667, 0.0417])
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

DEFAULT_ORDER = 8
# inner series of a composition must fix the origin
ZERO_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients of ``z**0 .. z**order``; immutable."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least the constant term")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "TruncatedSeries":
        """Build from a coefficient list, padding with zeros or cutting to ``order``."""
        c = np.asarray(coeffs, dtype=complex).reshape(-1)
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=complex)
        k = min(order + 1, c.size)
        out[:k] = c[:k]
        return cls(out)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The identity function ``z``."""
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"TruncatedSeries({np.array2string(self.coeffs, precision=6)}, order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def allclose(self, other, atol=1e-13) -> bool:
        other = _as_series(other, self.order)
        n = min(self.order, other.order) + 1
        return bool(np.allclose(self.coeffs[:n], other.coeffs[:n], rtol=0, atol=atol))

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (Horner)."""
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            out = out * z + c
        return out

    def __add__(self, other):
        return add(self, _as_series(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return add(self, -_as_series(other, self.order))

    def __rsub__(self, other):
        return add(_as_series(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs * other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs / other)
        return mul(self, reciprocal(other))

    def __rtruediv__(self, other):
        return mul(_as_series(other, self.order), reciprocal(self))

    def __pow__(self, k: int):
        if k < 0 or int(k) != k:
            raise ValueError("only non-negative integer powers")
        out = TruncatedSeries.constant(1, self.order)
        for _ in range(int(k)):
            out = mul(out, self)
        return out

    def shift_down(self) -> "TruncatedSeries":
        """``(a(z) - a(0)) / z``; the order drops by one."""
        if self.order == 0:
            raise ValueError("nothing left after dividing a constant series by z")
        return TruncatedSeries(self.coeffs[1:])

    def shift_up(self) -> "TruncatedSeries":
        """``z * a(z)``; the order grows by one."""
        return TruncatedSeries(np.concatenate([[0], self.coeffs]))

    def scale_argument(self, t) -> "TruncatedSeries":
        """Series of ``z -> a(t*z)``."""
        return TruncatedSeries(self.coeffs * complex(t) ** np.arange(self.coeffs.size))


def _as_series(x, order):
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(x, order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order) + 1
    return TruncatedSeries(a.coeffs[:n] + b.coeffs[:n])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order) + 1
    return TruncatedSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Series of ``outer(inner(z))``.

    ``inner`` must vanish at the origin, otherwise every coefficient of
    ``outer`` contributes to every coefficient of the result and the
    truncation is meaningless.
    """
    if abs(inner.coeffs[0]) > ZERO_TOL:
        raise ValueError(f"inner series has nonzero constant term {inner.coeffs[0]!r}")
    n = min(outer.order, inner.order)
    w = TruncatedSeries(np.concatenate([[0], inner.coeffs[1 : n + 1]]))
    out = TruncatedSeries.constant(outer.coeffs[n], n)
    for c in outer.coeffs[n - 1 :: -1] if n > 0 else []:
        out = mul(out, w) + c
    return out


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1 / a`` by long division; needs ``a(0) != 0``."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    b = np.zeros_like(c)
    b[0] = 1 / c[0]
    for n in range(1, c.size):
        b[n] = -np.dot(c[1 : n + 1], b[n - 1 :: -1]) / c[0]
    return TruncatedSeries(b)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative. The order drops by one (a constant stays order 0)."""
    if a.order == 0:
        return TruncatedSeries.constant(0, 0)
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.coeffs.size))


def integrate0(a: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0.

    The result has order ``a.order + 1``: its top coefficient is exactly
    ``a[N] / (N + 1)``, so no information is invented.
    """
    k = np.arange(1, a.coeffs.size + 1)
    return TruncatedSeries(np.concatenate([[0], a.coeffs / k]))


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a(z))`` for ``a(0) == 0``.

    Uses ``b' = a' b``, i.e. ``n b[n] = sum_k k a[k] b[n-k]``.
    """
    if abs(a.coeffs[0]) > ZERO_TOL:
        raise ValueError("exp_series expects a zero constant term; factor exp(a0) out yourself")
    c = a.coeffs
    ka = c * np.arange(c.size)
    b = np.zeros_like(c)
    b[0] = 1
    for n in range(1, c.size):
        b[n] = np.dot(ka[1 : n + 1], b[n - 1 :: -1]) / n
    return TruncatedSeries(b)


def log_series(a: TruncatedSeries) -> TruncatedSeries:
    """Principal ``log(a(z))`` for ``a(0) == 1``."""
    if abs(a.coeffs[0] - 1) > ZERO_TOL:
        raise ValueError("log_series expects constant term 1")
    q = mul(derivative(a), reciprocal(a.truncate(max(a.order - 1, 0))))
    return integrate0(q)


def power_series(a: TruncatedSeries, beta: float) -> TruncatedSeries:
    """``a(z)**beta`` for ``a(0) == 1`` (principal branch)."""
    return exp_series(beta * log_series(a))
