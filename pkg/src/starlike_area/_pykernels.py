"""Pure-Python (numpy) versions of the series recurrences.

Used when the compiled ``_ckernels`` extension is not available. Each
recurrence step is a single dot product, so the cost is O(N^2) with
O(N) interpreter overhead.
"""
import numpy as np


def reciprocal(a):
    n = a.shape[0]
    b = np.empty(n, dtype=np.complex128)
    inv0 = 1.0 / a[0]
    b[0] = inv0
    for k in range(1, n):
        b[k] = -np.dot(a[1:k + 1], b[k - 1::-1]) * inv0
    return b


def log1(a):
    n = a.shape[0]
    lg = np.zeros(n, dtype=np.complex128)
    jl = np.zeros(n, dtype=np.complex128)  # j * lg[j]
    for k in range(1, n):
        s = np.dot(jl[1:k], a[k - 1:0:-1]) if k > 1 else 0.0
        lg[k] = a[k] - s / k
        jl[k] = k * lg[k]
    return lg


def exp(a):
    n = a.shape[0]
    e = np.empty(n, dtype=np.complex128)
    ja = np.arange(n) * a
    e[0] = np.exp(a[0])
    for k in range(1, n):
        e[k] = np.dot(ja[1:k + 1], e[k - 1::-1]) / k
    return e


def horner(coeffs, z):
    acc = np.full(z.shape, coeffs[-1], dtype=np.complex128)
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def back_substitute(u, rhs):
    n = rhs.shape[0]
    x = np.empty(n, dtype=np.float64)
    for k in range(n - 1, -1, -1):
        x[k] = (rhs[k] - np.dot(u[k, k + 1:], x[k + 1:])) / u[k, k]
    return x
