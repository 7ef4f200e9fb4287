"""Image areas of subdisks.

``area_series`` uses the coefficient formula ``pi * sum n |a_n|^2 r^(2n)``
that follows from Parseval-Gutzmer; ``area_quadrature`` integrates
``|f'|^2`` over the disk directly and serves as the independent check.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import RadiusOutOfRange
from .series import TruncatedSeries, require_normalized, ts_derivative, ts_eval, ts_reciprocal, ts_unshift

DIRICHLET_WINDOW = 10


@dataclass(frozen=True)
class AreaResult:
    value: float
    tail_estimate: float
    order_used: int

    def to_dict(self) -> dict:
        return asdict(self)


def _area_terms(coeffs: np.ndarray, r: float) -> np.ndarray:
    n = np.arange(coeffs.size)
    return np.pi * n * np.abs(coeffs) ** 2 * r ** (2 * n)


def area_series(f: TruncatedSeries, r: float) -> AreaResult:
    """Area of ``f(D_r)`` counted with multiplicity, from the coefficients.

    ``tail_estimate`` is the last retained term ``pi N |a_N|^2 r^(2N)``.
    """
    if not 0.0 < r <= 1.0:
        raise RadiusOutOfRange(f"r must lie in (0, 1], got {r}")
    terms = _area_terms(f.coeffs, r)
    return AreaResult(float(terms.sum()), float(terms[-1]), f.order)


def z_over_f(f: TruncatedSeries) -> TruncatedSeries:
    """``z / f`` for normalized ``f``; the result has order ``N - 1``."""
    require_normalized(f)
    return ts_reciprocal(ts_unshift(f))


def area_z_over_f(f: TruncatedSeries, r: float) -> AreaResult:
    return area_series(z_over_f(f), r)


def area_quadrature(f: TruncatedSeries, r: float, n_r: int = 400, n_theta: int = 1024) -> float:
    """Polar-grid quadrature of ``|f'(z)|^2`` over ``|z| < r``.

    Midpoint rule in the radius, trapezoid rule in the angle.
    """
    if not 0.0 < r <= 0.99:
        raise RadiusOutOfRange(f"quadrature radius must lie in (0, 0.99], got {r}")
    h = r / n_r
    radii = (np.arange(n_r) + 0.5) * h
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    z = radii[:, None] * np.exp(1j * theta)[None, :]
    fp = ts_eval(ts_derivative(f), z)
    ring = np.mean(np.abs(fp) ** 2, axis=1) * 2 * np.pi
    return float(np.sum(ring * radii) * h)


def circle_mean_square(f: TruncatedSeries, r: float, n_theta: int = 256) -> float:
    """``(1/2pi) int |f(r e^{it})|^2 dt`` by the trapezoid rule."""
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    return float(np.mean(np.abs(ts_eval(f, r * np.exp(1j * theta))) ** 2))


@dataclass(frozen=True)
class DirichletDiagnostic:
    partial_sum: float
    last_window: float
    ratio: float
    finite: bool
    order_used: int
    note: str = "heuristic: judged from the trailing coefficients only"

    def to_dict(self) -> dict:
        return asdict(self)


def dirichlet_finite(f: TruncatedSeries, tol: float = 1e-6) -> DirichletDiagnostic:
    """Heuristic check that ``Delta(1, f)`` is finite.

    Judges from the last ten coefficients: finite when their share of the
    partial sum ``pi sum n |a_n|^2`` is below ``tol``. Needs a series much
    longer than ten coefficients to say anything.
    """
    terms = _area_terms(f.coeffs, 1.0)
    total = float(terms.sum())
    tail = float(terms[-DIRICHLET_WINDOW:].sum())
    ratio = tail / total if total > 0 else 0.0
    return DirichletDiagnostic(total, tail, ratio, ratio < tol, f.order)
