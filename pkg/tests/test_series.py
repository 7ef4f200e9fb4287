import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starlike_area import _backend
from starlike_area.errors import NearZeroConstantTerm, NotNormalized
from starlike_area.series import (
    TruncatedSeries,
    ts_add,
    ts_derivative,
    ts_eval,
    ts_exp,
    ts_integrate,
    ts_log,
    ts_mul,
    ts_pow_real,
    ts_reciprocal,
    ts_rotate,
    ts_shift,
    ts_unshift,
)
from starlike_area.special import pochhammer

S = TruncatedSeries


def close(f, g, atol=1e-13):
    assert f.order == g.order
    np.testing.assert_allclose(f.coeffs, g.coeffs, rtol=0, atol=atol)


@st.composite
def series(draw, min_order=0, max_order=32, normalized_const=None):
    n = draw(st.integers(min_order, max_order))
    parts = st.floats(-1, 1, allow_nan=False)
    c = [complex(draw(parts), draw(parts)) for _ in range(n + 1)]
    if normalized_const is not None:
        c[0] = normalized_const
    return S(c)


class TestConstruction:
    def test_order_and_coeffs(self):
        f = S([1, 2, 3])
        assert f.order == 2 and len(f) == 3

    def test_rejects_empty_and_nonfinite(self):
        with pytest.raises(ValueError):
            S([])
        with pytest.raises(ValueError):
            S([1, np.nan])
        with pytest.raises(ValueError):
            S([1, np.inf])

    def test_immutable(self):
        f = S([1, 2])
        with pytest.raises(ValueError):
            f.coeffs[0] = 5

    def test_json_round_trip(self):
        f = S([1, 2 - 1j, 0.5j])
        data = json.loads(f.to_json())
        assert data == {"order": 2, "coeffs": [[1.0, 0.0], [2.0, -1.0], [0.0, 0.5]]}
        close(S.from_json(f.to_json()), f, atol=0)

    def test_json_order_mismatch(self):
        with pytest.raises(ValueError):
            S.from_dict({"order": 3, "coeffs": [[1, 0]]})


class TestArithmetic:
    def test_add_cancellation(self):
        close(ts_add(S([1, 1]), S([1, -1])), S([2, 0]))

    def test_add_identity(self):
        f = S([1, 2, 3])
        close(ts_add(f, S.constant(0, 2)), f)

    def test_add_truncates_to_smaller_order(self):
        close(ts_add(S([1, 2, 3]), S([1, 1])), S([2, 3]))

    def test_mul(self):
        close(ts_mul(S([1, -1, 0]), S([1, 1, 0])), S([1, 0, -1]))

    def test_mul_identity(self):
        f = S([1, 2, 3])
        close(ts_mul(f, S.constant(1, 2)), f)

    def test_square_matches_area_theorem_case(self):
        sq = ts_mul(S([1, -1, 0]), S([1, -1, 0]))
        close(sq, S([1, -2, 1]))

    def test_operators(self):
        f = S([1, 2])
        close(f + 1, S([2, 2]))
        close(1 - f, S([0, -2]))
        close(2 * f, S([2, 4]))
        close(f * f, S([1, 4]))


class TestReciprocal:
    def test_geometric(self):
        close(ts_reciprocal(S([1, -1, 0, 0, 0])), S([1, 1, 1, 1, 1]))

    @pytest.mark.parametrize("c", [1.0, 2.0])
    def test_constant(self, c):
        close(ts_reciprocal(S([c])), S([1 / c]))

    def test_near_zero_constant(self):
        with pytest.raises(NearZeroConstantTerm):
            ts_reciprocal(S([1e-13, 1]))


class TestCalculus:
    def test_derivative(self):
        close(ts_derivative(S([0, 1, 1])), S([1, 2]))

    def test_integrate(self):
        close(ts_integrate(S([1, 2])), S([0, 1, 1]))

    def test_derivative_of_constant(self):
        close(ts_derivative(S([3])), S([0]))


class TestLogExp:
    def test_log_one(self):
        close(ts_log(S.constant(1, 5)), S.constant(0, 5))

    def test_exp_zero(self):
        close(ts_exp(S.constant(0, 5)), S.constant(1, 5))

    def test_log_one_minus_z(self):
        N = 20
        # oracle: -1/(1-z) = -sum z^n, integrated term by term
        expected = np.zeros(N + 1)
        for n in range(N):
            expected[n + 1] = -1.0 / (n + 1)
        got = ts_log(S([1, -1] + [0] * (N - 1)))
        np.testing.assert_allclose(got.coeffs, expected, atol=1e-15)

    def test_log_requires_unit_constant(self):
        with pytest.raises(NotNormalized):
            ts_log(S([2, 1]))

    def test_exp_of_z_is_factorial_series(self):
        got = ts_exp(S([0, 1] + [0] * 10))
        np.testing.assert_allclose(got.coeffs.real, [1 / math.factorial(n) for n in range(12)], rtol=1e-15)


class TestPower:
    def test_integer_power(self):
        close(ts_pow_real(S([1, -1, 0, 0]), 2), S([1, -2, 1, 0]))

    def test_zero_power(self):
        close(ts_pow_real(S([1, 0.3, -0.2]), 0), S([1, 0, 0]))

    def test_requires_unit_constant(self):
        with pytest.raises(NotNormalized):
            ts_pow_real(S([0.5, 1]), 2)

    def test_binomial_against_pochhammer(self):
        alpha, beta = 0.5, 0.25
        gamma = 2 * (1 - beta)
        zeta = -gamma
        got = ts_pow_real(S([1, -alpha] + [0] * 7), gamma)
        # (1 - alpha z)^gamma = sum (zeta)_n / n! alpha^n z^n
        expected = [pochhammer(zeta, n) / math.factorial(n) * alpha**n for n in range(9)]
        np.testing.assert_allclose(got.coeffs.real, expected, atol=1e-15)
        np.testing.assert_allclose(got.coeffs.imag, 0, atol=1e-15)

    def test_binomial_plus_sign_alternates(self):
        alpha, gamma = 0.5, 1.5
        got = ts_pow_real(S([1, alpha] + [0] * 7), gamma)
        expected = [(-1) ** n * pochhammer(-gamma, n) / math.factorial(n) * alpha**n for n in range(9)]
        np.testing.assert_allclose(got.coeffs.real, expected, atol=1e-15)


class TestEval:
    def test_at_zero(self):
        assert ts_eval(S([1, 1]), 0) == 1
        f = S([3 - 1j, 2, 5])
        assert ts_eval(f, 0) == f.coeffs[0]

    def test_geometric_at_half(self):
        f = S([0] + [1] * 50)
        # truncation error of sum_{n<=50} 2^-n is exactly 2^-50
        assert abs(ts_eval(f, 0.5) - (1 - 2.0**-50)) < 1e-16

    def test_vectorized_shape(self):
        f = S([1, 2, 3])
        z = np.array([[0, 1], [2, 1j]])
        np.testing.assert_allclose(ts_eval(f, z), 1 + 2 * z + 3 * z**2)


class TestRotation:
    def test_zero_angle(self):
        f = S([0, 1, 2, 3])
        close(ts_rotate(f, 0.0), f)

    def test_koebe_pi(self):
        N = 10
        koebe = S([0] + [n for n in range(1, N + 1)])
        # z/(1+z)^2 = sum (-1)^(n-1) n z^n
        expected = S([0] + [(-1) ** (n - 1) * n for n in range(1, N + 1)])
        close(ts_rotate(koebe, math.pi), expected, atol=1e-13)

    def test_inverse(self):
        f = S([0, 1, 0.3 - 0.2j, 0.1j])
        close(ts_rotate(ts_rotate(f, 0.7), -0.7), f)

    def test_requires_normalized(self):
        with pytest.raises(NotNormalized):
            ts_rotate(S([0, 2, 1]), 0.1)

    def test_shift_unshift(self):
        f = S([1, 2])
        close(ts_unshift(ts_shift(f)), f)
        with pytest.raises(NotNormalized):
            ts_unshift(f)


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(f, g, h):
    tol = 1e-13
    close((f + g) + h, f + (g + h), atol=tol * 4)
    close(f * g, g * f, atol=tol * 40)
    close(f * (g + h), f * g + f * h, atol=tol * 80)


@settings(max_examples=60, deadline=None)
@given(series(normalized_const=1.0))
def test_exp_log_inverse(f):
    close(ts_exp(ts_log(f)), f, atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(series(normalized_const=0.0))
def test_log_exp_inverse(f):
    close(ts_log(ts_exp(f)), f, atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(series(normalized_const=1.0))
def test_reciprocal_two_sided(f):
    one = S.constant(1, f.order)
    r = ts_reciprocal(f)
    # rounding in each product coefficient scales with sum |f_j| |r_{k-j}|
    scale = np.convolve(np.abs(f.coeffs), np.abs(r.coeffs)).max()
    close(f * r, one, atol=1e-13 * scale)
    close(r * f, one, atol=1e-13 * scale)


@settings(max_examples=60, deadline=None)
@given(series())
def test_derivative_inverts_integrate(f):
    close(ts_derivative(ts_integrate(f)), f, atol=1e-15)


@pytest.mark.skipif(len(_backend.available()) < 2, reason="compiled kernels not built")
def test_backends_agree(rng):
    a = rng.uniform(-1, 1, 100) + 1j * rng.uniform(-1, 1, 100)
    a[0] = 1.0
    z = rng.uniform(-0.9, 0.9, 50) + 1j * rng.uniform(-0.9, 0.9, 50)
    u = np.triu(rng.uniform(0, 1, (30, 30))) + np.diag(np.arange(1, 31.0) ** 2)
    rhs = np.arange(1, 31.0)
    c, p = _backend._ckernels, _backend._pykernels
    for name in ("reciprocal", "log1", "exp"):
        np.testing.assert_allclose(getattr(c, name)(a), getattr(p, name)(a), rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(c.horner(a, z), p.horner(a, z), rtol=1e-12)
    np.testing.assert_allclose(c.back_substitute(u, rhs), p.back_substitute(u, rhs), rtol=1e-13)


def test_operations_under_each_backend(backend):
    f = S([1, -0.5, 0.25, 0.1])
    close(ts_exp(ts_log(f)), f, atol=1e-14)
    close(ts_mul(f, ts_reciprocal(f)), S.constant(1, 3), atol=1e-14)
    assert abs(ts_eval(f, 0.5) - (1 - 0.25 + 0.0625 + 0.0125)) < 1e-15


def test_backend_use_rejects_unknown():
    with pytest.raises(ValueError):
        _backend.use("fortran")
