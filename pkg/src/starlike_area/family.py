"""The classes S(alpha, beta) and their extremal functions.

``f`` belongs to S(alpha, beta) when ``p = z f'/f`` satisfies
``|(p - 1) / (p + 1 - 2 beta)| < alpha`` on the unit disk; beta = 0 gives
Padmanabhan's S(alpha) and alpha = 1 the starlike functions of order beta.
Members are synthesized from a Schwarz-type function ``w`` with ``|w| <= 1``
through ``g'/g = -2 alpha (1-beta) w / (1 - alpha z w)``, ``f = z/g``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EvaluationFailure, InvalidParameters
from .series import (
    TruncatedSeries,
    ts_derivative,
    ts_eval,
    ts_exp,
    ts_integrate,
    ts_mul,
    ts_pow_real,
    ts_reciprocal,
    ts_shift,
    ts_unshift,
    require_normalized,
)

MEMBERSHIP_MARGIN = 1e-9
DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95)
DEFAULT_ANGLES = 360
MAX_BLASCHKE_DEGREE = 3


@dataclass(frozen=True)
class FamilyParams:
    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        alpha, beta = float(self.alpha), float(self.beta)
        if not (0.0 < alpha <= 1.0):
            raise InvalidParameters(f"alpha must lie in (0, 1], got {self.alpha}")
        if not (0.0 <= beta < 1.0):
            raise InvalidParameters(f"beta must lie in [0, 1), got {self.beta}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def gamma(self) -> float:
        """The exponent ``2 (1 - beta)``."""
        return 2.0 * (1.0 - self.beta)


@dataclass(frozen=True)
class TargetRegion:
    """Region that must contain the values of ``z f'/f``.

    A disk (``alpha < 1``) or the half-plane ``Re > bound`` (``alpha = 1``).
    """

    kind: str
    center: float = 0.0
    radius: float = 0.0
    bound: float = 0.0

    def contains(self, w, tol=0.0):
        w = np.asarray(w)
        if self.kind == "disk":
            return np.abs(w - self.center) < self.radius + tol
        return w.real > self.bound - tol

    def contains_region(self, other: "TargetRegion", tol=1e-12) -> bool:
        """Closed containment of ``other`` in ``self``."""
        if self.kind == "half-plane":
            if other.kind == "half-plane":
                return other.bound >= self.bound - tol
            return other.center - other.radius >= self.bound - tol
        if other.kind == "half-plane":
            return False
        return abs(other.center - self.center) + other.radius <= self.radius + tol


def target_region(params: FamilyParams) -> TargetRegion:
    a, b = params.alpha, params.beta
    if a == 1.0:
        return TargetRegion("half-plane", bound=b)
    d = 1.0 - a * a
    return TargetRegion("disk", center=(1.0 + a * a * (1.0 - 2.0 * b)) / d, radius=2.0 * a * (1.0 - b) / d)


def janowski_params(params: FamilyParams) -> tuple[float, float]:
    """``(A, B)`` with S*(A, B) = S(alpha, beta)."""
    return (1.0 - 2.0 * params.beta) * params.alpha, -params.alpha


# -- extremal functions -------------------------------------------------------

def extremal_k(params: FamilyParams, N: int) -> TruncatedSeries:
    """``k(z) = z (1 - alpha z)^(-2(1-beta))`` to order ``N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    base = np.zeros(N, dtype=np.complex128)
    base[0] = 1.0
    if N > 1:
        base[1] = -params.alpha
    return ts_shift(ts_pow_real(TruncatedSeries(base), -params.gamma))


def extremal_g(params: FamilyParams, N: int) -> TruncatedSeries:
    """``z / k(z) = (1 - alpha z)^(2(1-beta))``, coefficients ``(zeta)_n alpha^n / n!``."""
    zeta = -params.gamma
    c = np.empty(N + 1)
    c[0] = 1.0
    for n in range(1, N + 1):
        c[n] = c[n - 1] * (zeta + n - 1) / n * params.alpha
    return TruncatedSeries(c)


# -- Schwarz-type functions ---------------------------------------------------

@dataclass(frozen=True)
class SchwarzSpec:
    """``w(z) = phase * constant_part * prod_j (z - a_j) / (1 - conj(a_j) z)``.

    ``|phase| = 1``, ``|constant_part| <= 1`` and at most three zeros ``a_j``
    in the open unit disk, so ``|w| <= 1`` on the disk by construction.
    """

    phase: complex = 1.0
    constant_part: complex = 1.0
    blaschke_zeros: tuple = field(default_factory=tuple)

    def __post_init__(self):
        phase, c = complex(self.phase), complex(self.constant_part)
        zeros = tuple(complex(a) for a in self.blaschke_zeros)
        if abs(abs(phase) - 1.0) > 1e-12:
            raise InvalidParameters(f"phase must be unimodular, |phase| = {abs(phase)}")
        if abs(c) > 1.0 + 1e-15:
            raise InvalidParameters(f"|constant_part| must be <= 1, got {abs(c)}")
        if len(zeros) > MAX_BLASCHKE_DEGREE:
            raise InvalidParameters(f"at most {MAX_BLASCHKE_DEGREE} Blaschke zeros, got {len(zeros)}")
        if any(abs(a) >= 1.0 for a in zeros):
            raise InvalidParameters("Blaschke zeros must lie in the open unit disk")
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "constant_part", c)
        object.__setattr__(self, "blaschke_zeros", zeros)

    @classmethod
    def constant(cls, value: complex) -> "SchwarzSpec":
        value = complex(value)
        if value == 0:
            return cls(1.0, 0.0)
        if abs(value) >= 1.0:
            return cls(value / abs(value), 1.0)
        return cls(1.0, value)

    @property
    def is_unimodular_constant(self) -> bool:
        return not self.blaschke_zeros and abs(abs(self.constant_part) - 1.0) <= 1e-15

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        w = np.full(z.shape, self.phase * self.constant_part)
        for a in self.blaschke_zeros:
            w = w * (z - a) / (1.0 - np.conj(a) * z)
        return w

    def series(self, order: int) -> TruncatedSeries:
        w = TruncatedSeries.constant(self.phase * self.constant_part, order)
        for a in self.blaschke_zeros:
            d = np.empty(order + 1, dtype=np.complex128)
            d[0] = -a
            if order >= 1:
                d[1:] = (1.0 - abs(a) ** 2) * np.conj(a) ** np.arange(order)
            w = ts_mul(w, TruncatedSeries(d))
        return w

    def to_dict(self) -> dict:
        return {
            "phase": [self.phase.real, self.phase.imag],
            "constant_part": [self.constant_part.real, self.constant_part.imag],
            "blaschke_zeros": [[a.real, a.imag] for a in self.blaschke_zeros],
        }


def sample_schwarz_spec(rng: np.random.Generator, max_modulus: float = 1.0) -> SchwarzSpec:
    """Draw a random :class:`SchwarzSpec`; ``|w| <= max_modulus`` on the disk.

    Mixes unimodular constants (extremal), interior constants, Blaschke
    products of degree 1-3 and scaled Blaschke products.
    """
    phase = cmath.exp(2j * math.pi * rng.random())
    kind = rng.choice(4, p=[0.1, 0.2, 0.4, 0.3])
    if kind == 0:
        return SchwarzSpec(phase, max_modulus)
    if kind == 1:
        return SchwarzSpec(phase, max_modulus * rng.random())
    degree = int(rng.integers(1, MAX_BLASCHKE_DEGREE + 1))
    radii = 0.9 * np.sqrt(rng.random(degree))
    angles = 2 * math.pi * rng.random(degree)
    zeros = tuple(radii * np.exp(1j * angles))
    scale = max_modulus if kind == 2 else max_modulus * rng.random()
    return SchwarzSpec(phase, scale, zeros)


def synthesize_from_schwarz(spec: SchwarzSpec, params: FamilyParams, N: int) -> TruncatedSeries:
    """Member ``f = z/g`` of S(alpha, beta) generated by ``w`` (order ``N``)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    m = N - 1
    w = spec.series(m)
    denom = TruncatedSeries.constant(1.0, m) - params.alpha * ts_shift(w).truncate(m)
    log_deriv = (-params.gamma * params.alpha) * ts_mul(w, ts_reciprocal(denom))
    g = ts_exp(ts_integrate(log_deriv).truncate(m))
    return ts_shift(ts_reciprocal(g))


# -- Lemma-3 style transform ----------------------------------------------------

def lemma3_transform(f: TruncatedSeries, beta: float, N: int | None = None) -> TruncatedSeries:
    """``F(z) = z (f(z)/z)^(1/(1-beta))``; maps S(alpha, beta) onto S(alpha)."""
    return _power_transform(f, 1.0 / (1.0 - beta), N)


def lemma3_inverse(F: TruncatedSeries, beta: float, N: int | None = None) -> TruncatedSeries:
    """``f(z) = z (F(z)/z)^(1-beta)``."""
    return _power_transform(F, 1.0 - beta, N)


def _power_transform(f, exponent, N):
    if N is not None:
        f = f.truncate(N)
    require_normalized(f)
    return ts_shift(ts_pow_real(ts_unshift(f), exponent))


# -- membership ---------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    radii: tuple = DEFAULT_RADII
    n_angles: int = DEFAULT_ANGLES

    def points(self, r_max: float) -> np.ndarray:
        radii = sorted({r for r in self.radii if r <= r_max} | {r_max})
        theta = 2 * np.pi * np.arange(self.n_angles) / self.n_angles
        return (np.asarray(radii)[:, None] * np.exp(1j * theta)[None, :]).ravel()


@dataclass(frozen=True)
class MembershipReport:
    passed: bool
    max_ratio: float
    argmax_z: complex
    alpha: float
    beta: float
    r_max: float
    grid: GridSpec

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "max_ratio": self.max_ratio,
            "argmax_z": [self.argmax_z.real, self.argmax_z.imag],
            "grid": {"radii": list(self.grid.radii), "n_angles": self.grid.n_angles, "r_max": self.r_max},
        }


def starlike_quotient(f: TruncatedSeries, z) -> np.ndarray:
    """``p(z) = z f'(z) / f(z)``, evaluated as ``f'(z) / (f(z)/z)``."""
    require_normalized(f)
    fp = ts_eval(ts_derivative(f), z)
    h = ts_eval(ts_unshift(f), z)
    if np.any(~np.isfinite(h)) or np.min(np.abs(h)) <= 1e-12:
        raise EvaluationFailure("f(z)/z vanishes on the evaluation grid")
    return fp / h


def subordination_ratio(f: TruncatedSeries, params: FamilyParams, z) -> np.ndarray:
    """``|(p - 1) / (p + 1 - 2 beta)|`` at the points ``z``."""
    p = starlike_quotient(f, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(p - 1.0) / np.abs(p + 1.0 - 2.0 * params.beta)
    return np.where(np.isnan(ratio), np.inf, ratio)


def membership_test(f: TruncatedSeries, params: FamilyParams, r_max: float = 0.95,
                    grid: GridSpec | None = None, margin: float = MEMBERSHIP_MARGIN) -> MembershipReport:
    """Necessary numerical test of ``f in S(alpha, beta)`` on ``|z| <= r_max``.

    The series must be long enough that truncation error is small at
    ``r_max``. A pass is not a proof of membership.
    """
    if not 0.0 < r_max < 1.0:
        raise ValueError(f"r_max must lie in (0, 1), got {r_max}")
    grid = grid or GridSpec()
    z = grid.points(r_max)
    ratio = subordination_ratio(f, params, z)
    i = int(np.argmax(ratio))
    max_ratio = float(ratio[i])
    return MembershipReport(max_ratio < params.alpha + margin, max_ratio, complex(z[i]),
                            params.alpha, params.beta, r_max, grid)
