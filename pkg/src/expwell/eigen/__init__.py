"""Self-contained symmetric eigensolvers.

Tridiagonal matrices go through implicit-shift QL with Wilkinson shifts;
dense symmetric matrices are Householder-reduced first.  The hot loops
live in a compiled extension when it was built, with a pure-Python
fallback of identical semantics selected at import time otherwise.  Set
``EXPWELL_PURE_PYTHON=1`` to force the fallback (the benchmark uses this
to compare the two).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

if os.environ.get("EXPWELL_PURE_PYTHON"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "DenseSym",
    "EigResult",
    "SymTridiag",
    "backend_name",
    "eig_dense_sym",
    "eig_tridiag",
]


def backend_name() -> str:
    """Which kernel backend this process is running on."""
    return BACKEND


class ConvergenceError(RuntimeError):
    """QL iteration hit its sweep cap; ``partial`` carries what was found."""

    def __init__(self, message: str, partial: "EigResult"):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class SymTridiag:
    """Symmetric tridiagonal matrix as (diagonal, off-diagonal) vectors."""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        d = np.atleast_1d(np.asarray(self.diag, dtype=float))
        o = np.atleast_1d(np.asarray(self.off, dtype=float)) if np.size(self.off) else np.zeros(0)
        if d.ndim != 1 or d.size < 1:
            raise ValueError("diag must be a vector of length >= 1")
        if o.size != d.size - 1:
            raise ValueError(f"off must have length {d.size - 1}, got {o.size}")
        if not (np.isfinite(d).all() and np.isfinite(o).all()):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "off", o)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        a = np.diag(self.diag)
        if self.n > 1:
            idx = np.arange(self.n - 1)
            a[idx, idx + 1] = self.off
            a[idx + 1, idx] = self.off
        return a


@dataclass(frozen=True)
class DenseSym:
    """Dense symmetric matrix; exact symmetry is enforced at construction."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(np.asarray(self.entries, dtype=float))
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("entries must be a square matrix")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(a, a.T):
            raise ValueError("entries must be exactly symmetric")
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class EigResult:
    """Ascending eigenvalues, plus orthonormal column eigenvectors on request."""

    values: np.ndarray
    vectors: Optional[np.ndarray] = None


def _finish(d: np.ndarray, z: Optional[np.ndarray], status: int, cap: int) -> EigResult:
    order = np.argsort(d, kind="stable")
    result = EigResult(d[order], z[:, order] if z is not None else None)
    if status < 0:
        raise ConvergenceError(
            f"QL iteration exceeded its sweep cap ({cap} sweeps) before all "
            f"off-diagonal entries deflated",
            partial=result,
        )
    return result


def eig_tridiag(
    m: SymTridiag, want_vectors: bool = False, max_sweeps: Optional[int] = None
) -> EigResult:
    """Eigen-decomposition of a symmetric tridiagonal matrix.

    ``max_sweeps`` caps the total number of implicit QL sweeps (default
    50 per matrix dimension); exceeding it raises :class:`ConvergenceError`
    with the partial result attached.
    """
    n = m.n
    cap = 50 * n if max_sweeps is None else max_sweeps
    d = np.ascontiguousarray(m.diag, dtype=float).copy()
    e = np.zeros(n)
    e[: n - 1] = m.off
    z = np.eye(n) if want_vectors else None
    status = _impl.ql_implicit_shift(d, e, z, cap)
    return _finish(d, z, status, cap)


def eig_dense_sym(
    m: DenseSym, want_vectors: bool = False, max_sweeps: Optional[int] = None
) -> EigResult:
    """Eigen-decomposition of a dense symmetric matrix (Householder + QL)."""
    n = m.n
    cap = 50 * n if max_sweeps is None else max_sweeps
    a = np.ascontiguousarray(m.entries, dtype=float).copy()
    d = np.empty(n)
    e = np.empty(n)
    q = np.eye(n) if want_vectors else None
    _impl.householder_reduce(a, d, e, q)
    status = _impl.ql_implicit_shift(d, e, q, cap)
    return _finish(d, q, status, cap)
