"""Sturm-sequence bisection: the independent eigenvalue oracle.

Counts eigenvalues below a pivot from the inertia of the shifted matrix,
then bisects.  Deliberately shares no code with the QL path so the two
routes can cross-check each other in the test suite.
"""

from __future__ import annotations

import numpy as np

# pivot floor guarding the continued-fraction recurrence against an
# exact zero pivot (pivot == eigenvalue of a leading submatrix)
_PIVMIN = 1e-290


def tridiag_count_below(diag, off, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below x."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    count = 0
    t = diag[0] - x
    if t < 0.0:
        count += 1
    for i in range(1, diag.size):
        if abs(t) < _PIVMIN:
            t = -_PIVMIN
        t = (diag[i] - x) - off[i - 1] * off[i - 1] / t
        if t < 0.0:
            count += 1
    return count


def tridiag_eigenvalues_bisect(diag, off, tol: float = 1e-12) -> np.ndarray:
    """All eigenvalues, ascending, by bisection on the Sturm count."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = diag.size
    radius = np.zeros(n)
    if n > 1:
        radius[:-1] += np.abs(off)
        radius[1:] += np.abs(off)
    lo0 = float((diag - radius).min())
    hi0 = float((diag + radius).max())
    values = np.empty(n)
    for k in range(n):
        lo, hi = lo0, hi0
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if tridiag_count_below(diag, off, mid) >= k + 1:
                hi = mid
            else:
                lo = mid
        values[k] = 0.5 * (lo + hi)
    return values


def dense_count_below(entries, x: float) -> int:
    """Eigenvalues of a symmetric matrix strictly below x.

    Uses the sign changes of the leading principal minors of A - x*I
    (Jacobi's inertia criterion), with the determinants evaluated by LU,
    independent of the Householder + QL route.  Raises if a minor
    vanishes; perturb the pivot in that (measure-zero) case.
    """
    a = np.asarray(entries, dtype=float) - x * np.eye(len(entries))
    count = 0
    prev = 1.0
    for j in range(1, a.shape[0] + 1):
        det = float(np.linalg.det(a[:j, :j]))
        if det == 0.0:
            raise ValueError(f"singular leading minor at order {j}; shift the pivot")
        if det * prev < 0.0:
            count += 1
        prev = det
    return count
