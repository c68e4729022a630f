"""Pure-Python kernels for the symmetric eigensolvers.

Fallback with the exact same contracts as the compiled ``_kernels``
extension; :mod:`expwell.eigen` picks one of the two at import time.
Inner rotations and reflections are vectorized with numpy, the sweep
bookkeeping stays in plain Python.
"""

from __future__ import annotations

import math

import numpy as np

MACHEPS = float(np.finfo(np.float64).eps)


def ql_implicit_shift(d, e, z=None, max_sweeps=1000000):
    """Implicit-shift QL iteration on a symmetric tridiagonal matrix.

    ``d`` (length n) holds the diagonal and is overwritten with the
    unordered eigenvalues.  ``e`` (length n) holds the off-diagonal in
    ``e[:n-1]`` with ``e[n-1]`` as scratch, and is destroyed.  When ``z``
    is given, the rotations are accumulated into its columns: pass the
    identity for eigenvectors of the tridiagonal matrix itself, or a
    Householder product for those of a reduced dense matrix.

    Each sweep applies one Wilkinson shift, computed from the leading
    2x2 of the active block; an off-diagonal entry deflates once it is
    negligible against the sum of its diagonal neighbours (machine
    epsilon).  Returns the number of sweeps used, or -1 when
    ``max_sweeps`` was exhausted (results are then partial).
    """
    n = d.shape[0]
    if n <= 1:
        return 0
    e[n - 1] = 0.0
    sweeps = 0
    for l in range(n):
        while True:
            for m in range(l, n - 1):
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= MACHEPS * dd:
                    break
            else:
                m = n - 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                return -1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            interrupted = False
            for i in range(m, l, -1):
                f = s * e[i - 1]
                b = c * e[i - 1]
                r = math.hypot(f, g)
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
                if z is not None:
                    col = z[:, i].copy()
                    z[:, i] = s * z[:, i - 1] + c * col
                    z[:, i - 1] = c * z[:, i - 1] - s * col
            if not interrupted:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return sweeps


def householder_reduce(a, d, e, q=None):
    """Householder reduction of a symmetric matrix to tridiagonal form.

    ``a`` is destroyed (only its tridiagonal bands are meaningful on
    exit).  ``d`` and ``e`` receive the diagonal and off-diagonal, with
    ``e[n-1]`` zeroed.  When ``q`` is given (the identity on entry), it is
    overwritten with the accumulated orthogonal transform whose columns
    feed straight into :func:`ql_implicit_shift`.
    """
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k]
        alpha = math.sqrt(float(x @ x))
        if alpha == 0.0:
            continue
        if x[0] > 0.0:
            alpha = -alpha  # sign opposite to x[0] avoids cancellation
        v = x.copy()
        v[0] -= alpha
        vnorm2 = float(v @ v)
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        w = beta * (a[k + 1 :, k + 1 :] @ v)
        w -= (0.5 * beta * float(w @ v)) * v
        a[k + 1 :, k + 1 :] -= np.outer(w, v) + np.outer(v, w)
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        if q is not None:
            t = beta * (q[:, k + 1 :] @ v)
            q[:, k + 1 :] -= np.outer(t, v)
    d[:] = np.diagonal(a)
    e[: n - 1] = np.diagonal(a, 1)
    e[n - 1] = 0.0
