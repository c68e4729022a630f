"""Compiled kernels for the symmetric eigensolvers.

Same contracts as the pure-Python ``_pykernels`` module; these carry the
hot loops (QL sweeps and Householder reflections) as tight C code.
"""

from libc.math cimport copysign, fabs, hypot, sqrt

import numpy as np

cdef double MACHEPS = 2.220446049250313e-16

_DUMMY = np.zeros((1, 1))


def ql_implicit_shift(double[::1] d, double[::1] e, z=None, int max_sweeps=1000000):
    """Implicit-shift QL iteration; see ``_pykernels.ql_implicit_shift``."""
    cdef bint use_z = z is not None
    cdef double[:, ::1] zv = z if use_z else _DUMMY
    return _ql(d, e, zv, use_z, max_sweeps)


cdef int _ql(double[::1] d, double[::1] e, double[:, ::1] z, bint use_z,
             int max_sweeps) except? -2:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t l, m, i, k
    cdef double dd, g, r, s, c, p, f, b, zk
    cdef int sweeps = 0
    cdef bint interrupted

    if n <= 1:
        return 0
    e[n - 1] = 0.0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= MACHEPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                return -1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            interrupted = False
            for i in range(m, l, -1):
                f = s * e[i - 1]
                b = c * e[i - 1]
                r = hypot(f, g)
                e[i] = r
                if r == 0.0:
                    # rotation annihilated prematurely: recover and resweep
                    d[i] -= p
                    e[m] = 0.0
                    interrupted = True
                    break
                s = f / r
                c = g / r
                g = d[i] - p
                r = (d[i - 1] - g) * s + 2.0 * c * b
                p = s * r
                d[i] = g + p
                g = c * r - b
                if use_z:
                    for k in range(n):
                        zk = z[k, i]
                        z[k, i] = s * z[k, i - 1] + c * zk
                        z[k, i - 1] = c * z[k, i - 1] - s * zk
            if not interrupted:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return sweeps


def householder_reduce(double[:, ::1] a, double[::1] d, double[::1] e, q=None):
    """Householder reduction; see ``_pykernels.householder_reduce``."""
    cdef bint accumulate = q is not None
    cdef double[:, ::1] qv = q if accumulate else _DUMMY
    cdef Py_ssize_t n = a.shape[0]
    work = np.zeros((2, n))
    cdef double[:, ::1] wv = work
    _householder(a, d, e, qv, accumulate, wv)


cdef void _householder(double[:, ::1] a, double[::1] d, double[::1] e,
                       double[:, ::1] q, bint accumulate,
                       double[:, ::1] work) noexcept:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t k, i, j
    cdef double s, alpha, vnorm2, beta, kappa, wi, vi

    for k in range(n - 2):
        s = 0.0
        for i in range(k + 1, n):
            s += a[i, k] * a[i, k]
        alpha = sqrt(s)
        if alpha == 0.0:
            continue
        if a[k + 1, k] > 0.0:
            alpha = -alpha  # sign opposite to the pivot avoids cancellation
        for i in range(k + 1, n):
            work[0, i] = a[i, k]
        work[0, k + 1] -= alpha
        vnorm2 = 0.0
        for i in range(k + 1, n):
            vnorm2 += work[0, i] * work[0, i]
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        kappa = 0.0
        for i in range(k + 1, n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * work[0, j]
            work[1, i] = beta * s
            kappa += work[1, i] * work[0, i]
        kappa *= 0.5 * beta
        for i in range(k + 1, n):
            work[1, i] -= kappa * work[0, i]
        for i in range(k + 1, n):
            wi = work[1, i]
            vi = work[0, i]
            for j in range(k + 1, n):
                a[i, j] -= wi * work[0, j] + vi * work[1, j]
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        if accumulate:
            for i in range(n):
                s = 0.0
                for j in range(k + 1, n):
                    s += q[i, j] * work[0, j]
                s *= beta
                for j in range(k + 1, n):
                    q[i, j] -= s * work[0, j]
    for i in range(n):
        d[i] = a[i, i]
    for i in range(n - 1):
        e[i] = a[i, i + 1]
    e[n - 1] = 0.0
