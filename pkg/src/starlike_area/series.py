"""Truncated complex power series about the origin.

A :class:`TruncatedSeries` holds ``a_0 .. a_N`` densely. Arithmetic between
series of different orders truncates to the smaller order. All values are
immutable, so series can be shared freely between threads.

The O(N^2) recurrences (reciprocal, log, exp, Horner evaluation) dispatch to
the kernel backend chosen in :mod:`starlike_area._backend`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Number

import numpy as np

from . import _backend
from .errors import NearZeroConstantTerm, NotNormalized

#: threshold below which a constant term counts as zero (reciprocal, log)
EPS0 = 1e-12

DEFAULT_ORDER = 64
HIGH_RADIUS_ORDER = 256


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Taylor coefficients ``a_0, ..., a_N`` of an analytic function.

    Parameters
    ----------
    coeffs : array_like of complex
        Coefficients in increasing degree. Copied and made read-only.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value, order=0) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order=1) -> "TruncatedSeries":
        """The function f(z) = z."""
        c = np.zeros(max(order, 1) + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={np.array2string(self.coeffs[:6], precision=6)}{'...' if self.order > 5 else ''})"

    def __add__(self, other):
        if isinstance(other, Number):
            other = TruncatedSeries.constant(other, self.order)
        return ts_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self.coeffs * other)
        return ts_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, z):
        return ts_eval(self, z)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order} by truncation")
        return TruncatedSeries(self.coeffs[: order + 1])

    def allclose(self, other, atol=1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.max(np.abs(self.coeffs[:n] - other.coeffs[:n])) <= atol)

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [[z.real, z.imag] for z in self.coeffs.tolist()]}

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError(f"order {data['order']} does not match {len(coeffs)} coefficients")
        return cls(coeffs)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_dict(json.loads(text))


def _common(f, g):
    n = min(f.order, g.order) + 1
    return f.coeffs[:n], g.coeffs[:n]


def ts_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    a, b = _common(f, g)
    return TruncatedSeries(a + b)


def ts_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to ``min(f.order, g.order)``."""
    a, b = _common(f, g)
    return TruncatedSeries(np.convolve(a, b)[: a.size])


def ts_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f as a series of the same order.

    Raises
    ------
    NearZeroConstantTerm
        If ``|a_0| <= EPS0``.
    """
    if abs(f.coeffs[0]) <= EPS0:
        raise NearZeroConstantTerm(f"|a_0| = {abs(f.coeffs[0]):.3g} <= {EPS0}")
    return TruncatedSeries(_backend.kernels.reciprocal(f.coeffs))


def ts_derivative(f: TruncatedSeries) -> TruncatedSeries:
    if f.order == 0:
        return TruncatedSeries([0.0])
    n = np.arange(1, f.order + 1)
    return TruncatedSeries(n * f.coeffs[1:])


def ts_integrate(f: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0; the order grows by one."""
    c = np.empty(f.order + 2, dtype=np.complex128)
    c[0] = 0.0
    c[1:] = f.coeffs / np.arange(1, f.order + 2)
    return TruncatedSeries(c)


def _require_unit_constant(f):
    if abs(f.coeffs[0] - 1.0) > EPS0:
        raise NotNormalized(f"expected a_0 = 1, got {f.coeffs[0]:.6g}")


def ts_log(f: TruncatedSeries) -> TruncatedSeries:
    """Principal log of a series with ``a_0 = 1``, via ``(log f)' = f'/f``."""
    _require_unit_constant(f)
    return TruncatedSeries(_backend.kernels.log1(f.coeffs))


def ts_exp(f: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(_backend.kernels.exp(f.coeffs))


def ts_pow_real(f: TruncatedSeries, gamma: float) -> TruncatedSeries:
    """``f**gamma = exp(gamma * log f)`` for ``a_0 = 1``."""
    _require_unit_constant(f)
    return ts_exp(ts_log(f) * float(gamma))


def ts_eval(f: TruncatedSeries, z):
    """Horner evaluation at a scalar or an array of points."""
    z_arr = np.asarray(z, dtype=np.complex128)
    flat = np.ascontiguousarray(z_arr.ravel())
    values = _backend.kernels.horner(f.coeffs, flat).reshape(z_arr.shape)
    if z_arr.ndim == 0:
        return complex(values)
    return values


def ts_shift(f: TruncatedSeries, k: int = 1) -> TruncatedSeries:
    """Multiply by ``z**k`` (order grows by ``k``)."""
    return TruncatedSeries(np.concatenate([np.zeros(k, dtype=np.complex128), f.coeffs]))


def ts_unshift(f: TruncatedSeries, k: int = 1, tol: float = EPS0) -> TruncatedSeries:
    """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
    if f.order < k:
        raise ValueError(f"order {f.order} too small to divide by z^{k}")
    if np.any(np.abs(f.coeffs[:k]) > tol):
        raise NotNormalized(f"series is not divisible by z^{k}")
    return TruncatedSeries(f.coeffs[k:])


def is_normalized(f: TruncatedSeries, tol: float = EPS0) -> bool:
    """True when f(0) = 0 and f'(0) = 1 up to ``tol``."""
    return f.order >= 1 and abs(f.coeffs[0]) <= tol and abs(f.coeffs[1] - 1.0) <= tol


def require_normalized(f: TruncatedSeries) -> None:
    if not is_normalized(f):
        head = f.coeffs[:2] if f.order >= 1 else f.coeffs
        raise NotNormalized(f"expected f(0)=0, f'(0)=1; leading coefficients {head}")


def ts_rotate(f: TruncatedSeries, theta: float) -> TruncatedSeries:
    """Rotation ``exp(-i theta) f(exp(i theta) z)``: ``a_n -> a_n exp(i (n-1) theta)``."""
    require_normalized(f)
    n = np.arange(f.order + 1)
    return TruncatedSeries(f.coeffs * np.exp(1j * (n - 1) * theta))
