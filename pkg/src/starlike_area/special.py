"""Pochhammer symbols, the Gauss series 2F1 and the closed-form maximal areas."""
from __future__ import annotations

import math
from typing import NamedTuple

from .errors import BadParameter, DivergentSeries, RadiusOutOfRange

DEFAULT_TOL = 1e-14
MAX_TERMS = 100_000


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``, with ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


class HyperParams(NamedTuple):
    a: float
    b: float
    c: float
    x: float


class HyperSum(NamedTuple):
    value: float
    error_estimate: float
    terms: int
    terminated: bool


def _is_nonpositive_int(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def _terminates(a: float, b: float) -> bool:
    return _is_nonpositive_int(a) or _is_nonpositive_int(b)


def gauss_2f1(a, b=None, c=None, x=None, tol=DEFAULT_TOL, *, full_output=False, max_terms=MAX_TERMS):
    """Partial sums of ``2F1(a, b; c; x)`` for real ``0 <= x <= 1``.

    Accepts either four scalars or a single :class:`HyperParams`. The sum
    stops once ``|term| < tol * |sum|`` (or the series terminates); the
    stopping term is reported as the error estimate. At ``x = 1`` a
    non-terminating series is summed in closed form by Gauss's theorem.

    Raises
    ------
    DivergentSeries
        ``x >= 1`` without termination or ``c - a - b > 0`` at ``x == 1``,
        ``x < 0``, or the term cap was hit.
    BadParameter
        ``c`` is a non-positive integer reached before the series terminates.
    """
    if isinstance(a, HyperParams):
        a, b, c, x = a
    a, b, c, x = float(a), float(b), float(c), float(x)
    if x < 0:
        raise DivergentSeries(f"argument {x} outside [0, 1]")
    terminating = _terminates(a, b)
    if x > 1 and not terminating:
        raise DivergentSeries(f"argument {x} > 1 for a non-terminating series")
    if x == 1 and not terminating and not c - a - b > 0:
        raise DivergentSeries(f"divergent at x = 1: c - a - b = {c - a - b} <= 0")

    if x == 1 and not terminating:
        # the partial sums converge only algebraically at x = 1; use Gauss's theorem
        value = math.gamma(c) * math.gamma(c - a - b) / (math.gamma(c - a) * math.gamma(c - b))
        res = HyperSum(value, 0.0, 0, False)
        return res if full_output else res.value

    total = 1.0
    term = 1.0
    for n in range(max_terms):
        num = (a + n) * (b + n)
        den = (c + n) * (n + 1)
        if num == 0.0:
            res = HyperSum(total, 0.0, n + 1, True)
            break
        if den == 0.0:
            raise BadParameter(f"c = {c} is a non-positive integer reached before termination")
        term *= num / den * x
        total += term
        if term == 0.0:
            res = HyperSum(total, 0.0, n + 2, True)
            break
        if abs(term) < tol * abs(total):
            res = HyperSum(total, abs(term), n + 2, False)
            break
    else:
        raise DivergentSeries(f"2F1({a}, {b}; {c}; {x}) did not reach tol={tol} in {max_terms} terms")
    return res if full_output else res.value


def _check_rho(rho):
    if not 0.0 < rho <= 1.0:
        raise RadiusOutOfRange(f"rho must lie in (0, 1], got {rho}")


def max_area(params, rho: float, tol: float = DEFAULT_TOL) -> float:
    """Maximal area ``4 pi alpha^2 (1-beta)^2 rho^2 2F1(2beta-1, 2beta-1; 2; alpha^2 rho^2)``.

    ``params`` is a :class:`~starlike_area.family.FamilyParams` (or any
    object with ``alpha`` and ``beta`` attributes).
    """
    _check_rho(rho)
    alpha, beta = params.alpha, params.beta
    scale = 4.0 * alpha**2 * (1.0 - beta) ** 2
    p = 2.0 * beta - 1.0
    return math.pi * scale * rho**2 * gauss_2f1(p, p, 2.0, alpha**2 * rho**2, tol)


def max_area_beta0(alpha: float, rho: float) -> float:
    """The beta = 0 case in closed polynomial form, ``2 pi alpha^2 rho^2 (2 + alpha^2 rho^2)``."""
    _check_rho(rho)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    x = alpha**2 * rho**2
    return 2.0 * math.pi * x * (2.0 + x)
