"""Numerical checks of the coefficient inequalities behind the area maximum.

Notation: ``b_k`` are the coefficients of ``z/f``, ``c_k`` those of the
extremal ``z/k = (1 - alpha z)^gamma`` with ``gamma = 2(1 - beta)``, and
``s_k = k^2 - (k - gamma)^2 alpha^2 rho^2``.

* :func:`clunie_inequality` evaluates both sides of the rho-scaled Clunie bound
  ``sum_{k<n} s_k |b_k|^2 rho^2k + n^2 |b_n|^2 rho^2n <= gamma^2 alpha^2 rho^2``.
* :func:`solve_lambda` finds multipliers ``lambda_{n,N}`` that turn the ``N``
  Clunie bounds into the partial-sum dominance ``sum k |b_k|^2 rho^2k <=
  sum k |c_k|^2 rho^2k``.
* :func:`conjecture_trial` checks ``Delta(rho, z/f) <= A(rho)`` on seeded
  random members of the class.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import _backend
from .area import area_z_over_f, z_over_f
from .family import FamilyParams, SchwarzSpec, extremal_g, sample_schwarz_spec, synthesize_from_schwarz
from .series import HIGH_RADIUS_ORDER, TruncatedSeries
from .special import max_area

INEQUALITY_SLACK = 1e-8
EQUALITY_TOL = 1e-10


def _tail(b) -> np.ndarray:
    """``b_1, b_2, ...`` from a series (dropping ``b_0``) or a 1-based sequence."""
    if isinstance(b, TruncatedSeries):
        return b.coeffs[1:]
    return np.asarray(b, dtype=np.complex128).ravel()


def _cross_coefficients(params: FamilyParams, rho: float, N: int) -> np.ndarray:
    k = np.arange(1, N + 1, dtype=float)
    return k**2 - (k - params.gamma) ** 2 * params.alpha**2 * rho**2


class ClunieResult(NamedTuple):
    lhs: float
    bound: float

    @property
    def margin(self) -> float:
        return self.bound - self.lhs


def clunie_inequality(b, params: FamilyParams, rho: float, n: int) -> ClunieResult:
    """Both sides of the rho-scaled Clunie inequality at index ``n``.

    ``b`` is either the series ``z/f`` or the sequence ``b_1, b_2, ...``.
    """
    bk = _tail(b)
    if not 1 <= n <= bk.size:
        raise ValueError(f"n must lie in [1, {bk.size}], got {n}")
    if not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must lie in (0, 1], got {rho}")
    k = np.arange(1, n + 1)
    w = np.abs(bk[:n]) ** 2 * rho ** (2 * k)
    s = _cross_coefficients(params, rho, n)
    lhs = float(np.dot(s[: n - 1], w[: n - 1]) + n * n * w[n - 1])
    return ClunieResult(lhs, params.gamma**2 * params.alpha**2 * rho**2)


def clunie_lhs_all(b, params: FamilyParams, rho: float, N: int) -> np.ndarray:
    """Left sides of the Clunie inequalities for ``n = 1..N`` at once."""
    bk = _tail(b)[:N]
    k = np.arange(1, N + 1)
    w = np.abs(bk) ** 2 * rho ** (2 * k)
    prefix = np.concatenate([[0.0], np.cumsum(_cross_coefficients(params, rho, N) * w)[:-1]])
    return prefix + k**2 * w


@dataclass(frozen=True)
class LambdaSolution:
    N: int
    params: FamilyParams
    rho: float
    lam: np.ndarray
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals))

    @property
    def all_positive(self) -> bool:
        return bool(np.all(self.lam > 0))

    @property
    def implied_bound(self) -> float:
        """``gamma^2 alpha^2 rho^2 sum_n lambda_n``, the bound the multipliers give."""
        return self.params.gamma**2 * self.params.alpha**2 * self.rho**2 * float(np.sum(self.lam))

    def to_dict(self) -> dict:
        return {
            "n": self.N,
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "rho": self.rho,
            "lambda": self.lam.tolist(),
            "max_residual": self.max_residual,
            "all_positive": self.all_positive,
            "implied_bound": self.implied_bound,
        }


def lambda_system(N: int, params: FamilyParams, rho: float) -> tuple[np.ndarray, np.ndarray]:
    """Upper-triangular matrix and right side of the multiplier system.

    Row ``k``: ``k^2 lambda_k + s_k sum_{n>k} lambda_n = k``.
    """
    s = _cross_coefficients(params, rho, N)
    u = np.triu(np.repeat(s[:, None], N, axis=1), 1)
    k = np.arange(1, N + 1, dtype=float)
    u[np.diag_indices(N)] = k**2
    return u, k


def solve_lambda(N: int, params: FamilyParams, rho: float) -> LambdaSolution:
    """Back-substitution for ``lambda_{1,N} .. lambda_{N,N}``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    u, rhs = lambda_system(N, params, rho)
    lam = _backend.kernels.back_substitute(np.ascontiguousarray(u), rhs)
    residuals = np.abs(u @ lam - rhs) / rhs
    return LambdaSolution(N, params, rho, lam, residuals)


def solve_lambda_exact(N: int, alpha, beta, rho) -> list[Fraction]:
    """Exact rational solution; float inputs are taken at their binary value."""
    a2 = Fraction(alpha) ** 2
    r2 = Fraction(rho) ** 2
    gamma = 2 * (1 - Fraction(beta))
    lam = [Fraction(0)] * (N + 1)
    suffix = Fraction(0)
    for k in range(N, 0, -1):
        s = k * k - (k - gamma) ** 2 * a2 * r2
        lam[k] = (k - s * suffix) / (k * k)
        suffix += lam[k]
    return lam[1:]


def recombination_identity_check(sol: LambdaSolution, b) -> float:
    """``sum_n lambda_n LHS_n(b) - sum_k k |b_k|^2 rho^2k``; vanishes identically."""
    bk = _tail(b)
    if bk.size < sol.N:
        raise ValueError(f"need at least {sol.N} coefficients, got {bk.size}")
    lhs = clunie_lhs_all(bk, sol.params, sol.rho, sol.N)
    k = np.arange(1, sol.N + 1)
    target = np.sum(k * np.abs(bk[: sol.N]) ** 2 * sol.rho ** (2 * k))
    return float(np.dot(sol.lam, lhs) - target)


@dataclass(frozen=True)
class DominanceReport:
    N: int
    rho: float
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    def to_dict(self) -> dict:
        return {"n": self.N, "rho": self.rho, "lhs": self.lhs, "rhs": self.rhs, "margin": self.margin}


def _weighted_partial_sums(coeffs, rho):
    k = np.arange(1, coeffs.size + 1)
    return np.cumsum(k * np.abs(coeffs) ** 2 * rho ** (2 * k))


def dominance_profile(f: TruncatedSeries, params: FamilyParams, rho: float) -> tuple[np.ndarray, np.ndarray]:
    """Partial sums ``sum_{k<=N} k |b_k|^2 rho^2k`` and the extremal ones, for every N."""
    b = z_over_f(f).coeffs[1:]
    c = extremal_g(params, b.size).coeffs[1:]
    return _weighted_partial_sums(b, rho), _weighted_partial_sums(c, rho)


def dominance_check(f: TruncatedSeries, params: FamilyParams, rho: float, N: int) -> DominanceReport:
    """Compare the order-``N`` partial sums for ``z/f`` and the extremal ``z/k``.

    ``f`` is assumed to be in the class (see ``membership_test``).
    """
    if not 1 <= N <= f.order - 1:
        raise ValueError(f"N must lie in [1, {f.order - 1}] for a series of order {f.order}")
    lhs, rhs = dominance_profile(f, params, rho)
    return DominanceReport(N, rho, float(lhs[N - 1]), float(rhs[N - 1]))


def rho_small_regime_check(params: FamilyParams, rho: float, N: int) -> bool:
    """True when ``n rho^2n`` is non-increasing for ``n = 1..N``.

    This holds exactly for ``rho <= 1/sqrt(2)``; a relative slack of 1e-12
    absorbs the rounding of ``rho^2`` at the endpoint.
    """
    del params  # the regime depends on rho alone
    n = np.arange(1, N + 1, dtype=float)
    x = rho * rho
    return bool(np.all((n + 1) * x ** (n + 1) <= n * x**n * (1 + 1e-12)))


# -- sampling harness ---------------------------------------------------------

@dataclass(frozen=True)
class SampleRecord:
    index: int
    spec: SchwarzSpec
    areas: tuple
    bounds: tuple

    @property
    def ratios(self) -> tuple:
        return tuple(a / m for a, m in zip(self.areas, self.bounds))

    @property
    def gaps(self) -> tuple:
        return tuple(m - a for a, m in zip(self.areas, self.bounds))

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "spec": self.spec.to_dict(),
            "unimodular_constant": self.spec.is_unimodular_constant,
            "areas": list(self.areas),
            "ratios": list(self.ratios),
        }


@dataclass
class TrialReport:
    params: FamilyParams
    rho_grid: tuple
    n_samples: int
    seed: int
    order: int
    samples: list = field(default_factory=list)
    slack: float = INEQUALITY_SLACK

    @property
    def violations(self) -> list:
        """``(sample index, rho, excess)`` for every ``Delta > A + slack``."""
        out = []
        for s in self.samples:
            for rho, gap in zip(self.rho_grid, s.gaps):
                if gap < -self.slack:
                    out.append((s.index, rho, -gap))
        return out

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def best(self) -> tuple:
        """``(ratio, sample index, rho)`` of the largest ``Delta / A``."""
        return max(((r, s.index, rho) for s in self.samples for rho, r in zip(self.rho_grid, s.ratios)),
                   default=(float("nan"), -1, float("nan")))

    def equality_samples(self, tol: float = EQUALITY_TOL) -> list:
        """Samples with ``|A - Delta| <= tol`` at some radius."""
        return [s for s in self.samples if any(abs(g) <= tol for g in s.gaps)]

    def to_dict(self) -> dict:
        ratio, index, rho = self.best
        return {
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "rho_grid": list(self.rho_grid),
            "n_samples": self.n_samples,
            "seed": self.seed,
            "order": self.order,
            "passed": self.passed,
            "max_ratio": ratio,
            "argmax": {"index": index, "rho": rho,
                       "spec": self.samples[index].spec.to_dict() if index >= 0 else None},
            "violations": [{"index": i, "rho": r, "excess": e} for i, r, e in self.violations],
            "samples": [s.to_dict() for s in self.samples],
        }


def sample_generator(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample ``index`` of a trial seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _run_sample(index, spec, params, rho_grid, order, bounds):
    f = synthesize_from_schwarz(spec, params, order)
    areas = tuple(area_z_over_f(f, rho).value for rho in rho_grid)
    return SampleRecord(index, spec, areas, bounds)


def conjecture_trial(params: FamilyParams, rho_grid: Sequence[float], n_samples: int, seed: int, *,
                     order: int = HIGH_RADIUS_ORDER, forced_specs: Sequence[SchwarzSpec] = (),
                     max_modulus: float = 1.0, workers: int = 1) -> TrialReport:
    """Compare ``Delta(rho, z/f)`` with the closed-form maximum on random members.

    The first ``len(forced_specs)`` samples use the given Schwarz functions;
    the rest are drawn with :func:`sample_generator`. Results are ordered by
    sample index whatever the number of workers.
    """
    rho_grid = tuple(float(r) for r in rho_grid)
    if any(not 0.0 < r < 1.0 for r in rho_grid):
        raise ValueError("rho_grid must lie in (0, 1)")
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    bounds = tuple(max_area(params, rho) for rho in rho_grid)
    specs = [forced_specs[i] if i < len(forced_specs) else sample_schwarz_spec(sample_generator(seed, i), max_modulus)
             for i in range(n_samples)]
    args = [(i, spec, params, rho_grid, order, bounds) for i, spec in enumerate(specs)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_run_sample, *zip(*args), chunksize=max(1, n_samples // (4 * workers))))
    else:
        records = [_run_sample(*a) for a in args]
    return TrialReport(params, rho_grid, n_samples, seed, order, records)


def small_rho_limit(f: TruncatedSeries, rho: float) -> tuple[float, float]:
    """``(Delta(rho, z/f) / rho^2, pi |b_1|^2)``; the two agree as ``rho -> 0``."""
    b1 = z_over_f(f).coeffs[1]
    return area_z_over_f(f, rho).value / rho**2, math.pi * abs(b1) ** 2
