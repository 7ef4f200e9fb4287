# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrences for truncated power series.

Same call signatures as :mod:`starlike_area._pykernels`. Inputs are assumed
validated by the caller (contiguous complex128 / float64 arrays).
"""
import numpy as np

from libc.math cimport exp as c_exp


def reciprocal(const double complex[::1] a):
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] b = out
    cdef double complex inv0 = 1.0 / a[0]
    cdef double complex s
    b[0] = inv0
    for k in range(1, n):
        s = 0
        for j in range(1, k + 1):
            s = s + a[j] * b[k - j]
        b[k] = -s * inv0
    return out


def log1(const double complex[::1] a):
    # (log f)' = f'/f with a[0] == 1
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] lg = out
    cdef double complex s
    for k in range(1, n):
        s = 0
        for j in range(1, k):
            s = s + j * lg[j] * a[k - j]
        lg[k] = a[k] - s / k
    return out


def exp(const double complex[::1] a):
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] e = out
    cdef double complex s
    # exp of the constant term: e^{x+iy}
    cdef double complex z0 = a[0]
    e[0] = np.exp(z0)
    for k in range(1, n):
        s = 0
        for j in range(1, k + 1):
            s = s + j * a[j] * e[k - j]
        e[k] = s / k
    return out


def horner(const double complex[::1] coeffs, const double complex[::1] z):
    cdef Py_ssize_t m = z.shape[0], n = coeffs.shape[0], i, k
    cdef double[::1] zr = np.ascontiguousarray(np.asarray(z).real)
    cdef double[::1] zi = np.ascontiguousarray(np.asarray(z).imag)
    cdef double[::1] ar = np.full(m, coeffs[n - 1].real)
    cdef double[::1] ai = np.full(m, coeffs[n - 1].imag)
    cdef double cr, ci, t
    # points in the inner loop keep the multiply chains independent
    for k in range(n - 2, -1, -1):
        cr = coeffs[k].real
        ci = coeffs[k].imag
        for i in range(m):
            t = ar[i] * zr[i] - ai[i] * zi[i] + cr
            ai[i] = ar[i] * zi[i] + ai[i] * zr[i] + ci
            ar[i] = t
    return np.asarray(ar) + 1j * np.asarray(ai)


def back_substitute(const double[:, ::1] u, const double[::1] rhs):
    cdef Py_ssize_t n = rhs.shape[0], k, j
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] x = out
    cdef double s
    for k in range(n - 1, -1, -1):
        s = rhs[k]
        for j in range(k + 1, n):
            s -= u[k, j] * x[j]
        x[k] = s / u[k, k]
    return out
