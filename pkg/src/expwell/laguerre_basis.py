"""Independent Laguerre-basis evaluation of the well's spectrum.

The basis phi_n(x) = A_n y^alpha e^(-y/2) L_n(y) with y = exp(-lam x)
(note the inverted coordinate map) and 2*alpha = nu + 1 is orthonormal,
complete, and free of the capacity cap of the tridiagonal route, so a
large truncation K gives the reference numbers.  The Hamiltonian block
is assembled entrywise from

    -(2/lam^2) <m|H|n> = -sqrt(n(n+nu)) delta_{m,n-1}
                         + [n + (nu+1)^2/4] delta_{m,n}
                         - (n + nu/2 + 1 - aminus) T_{m,n}
                         - aplus * Q_{m,n}

where T = <m|y|n> is the tridiagonal first-moment matrix and Q stands in
for <m|1/y|n>, defined through the Gauss quadrature of the Laguerre
family (nodes and vectors of T itself).  The one-sided looking
delta_{m,n-1} term cancels analytically against the column-indexed T
coefficient, so the assembled matrix must come out symmetric; any
asymmetry beyond round-off is a construction bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import DenseSym, SymTridiag, eig_dense_sym, eig_tridiag
from .tra import PotentialParams, Spectrum

__all__ = [
    "AsymmetryError",
    "HERMITICITY_TOL",
    "LaguerreBasisConfig",
    "PlateauReport",
    "QuadratureRule",
    "assemble_hamiltonian",
    "gauss_laguerre_quadrature",
    "inverse_moment_matrix",
    "laguerre_hamiltonian",
    "laguerre_spectrum",
    "laguerre_t_matrix",
    "plateau_scan",
]

HERMITICITY_TOL = 1e-12


class AsymmetryError(RuntimeError):
    """Entrywise Hamiltonian assembly failed its symmetry cancellation."""


@dataclass(frozen=True)
class LaguerreBasisConfig:
    """Basis parameter nu > -1 and truncation size K >= 1."""

    nu: float
    k: int

    def __post_init__(self):
        if not self.nu > -1.0:
            raise ValueError(f"need nu > -1, got {self.nu}")
        if self.k < 1:
            raise ValueError(f"need K >= 1, got {self.k}")

    @property
    def alpha(self) -> float:
        return (self.nu + 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes xi_k (ascending, positive) and eigenvector matrix Lambda.

    ``vectors[m, k]`` is the m-th component of the normalized eigenvector
    belonging to node xi_k; columns are orthonormal.
    """

    nodes: np.ndarray
    vectors: np.ndarray


def laguerre_t_matrix(nu: float, k: int) -> SymTridiag:
    """First-moment matrix <m|y|n>: diag 2n+nu+1, off -sqrt((n+1)(n+nu+1))."""
    cfg = LaguerreBasisConfig(nu, k)
    n = np.arange(cfg.k, dtype=float)
    diag = 2.0 * n + nu + 1.0
    off = -np.sqrt((n[:-1] + 1.0) * (n[:-1] + nu + 1.0))
    return SymTridiag(diag, off)


def gauss_laguerre_quadrature(nu: float, k: int) -> QuadratureRule:
    """Quadrature rule from the eigen-decomposition of the T matrix.

    The nodes are the zeros of the degree-K Laguerre polynomial; the
    eigenvector components reproduce any matrix element <m|p(y)|n> of a
    polynomial p with degree up to 2K-1-m-n exactly.
    """
    res = eig_tridiag(laguerre_t_matrix(nu, k), want_vectors=True)
    return QuadratureRule(res.values, res.vectors)


def inverse_moment_matrix(nu: float, k: int) -> DenseSym:
    """Q_{m,n} = sum_k Lambda_{m,k} Lambda_{n,k} / xi_k, exactly symmetric.

    This quadrature sum *defines* the inverse-moment block; the direct
    integral diverges at nu = 0 and is never evaluated.
    """
    rule = gauss_laguerre_quadrature(nu, k)
    if not (rule.nodes > 0.0).all():
        raise ZeroDivisionError(
            "quadrature produced a non-positive node; inverse moments undefined"
        )
    scaled = rule.vectors / np.sqrt(rule.nodes)[None, :]
    s = scaled @ scaled.T
    # summands are symmetric in (m, n), so mirroring one triangle is the
    # same sum evaluated once; it guarantees bit-exact symmetry
    q = np.triu(s) + np.triu(s, 1).T
    return DenseSym(q)


def assemble_hamiltonian(p: PotentialParams, cfg: LaguerreBasisConfig) -> np.ndarray:
    """Raw entrywise Hamiltonian, exactly as the matrix elements read.

    No symmetrization of any kind; callers check the residual.
    """
    k = cfg.k
    nu = cfg.nu
    n = np.arange(k, dtype=float)
    t = laguerre_t_matrix(nu, k).to_dense()
    q = inverse_moment_matrix(nu, k).entries
    m = np.zeros((k, k))
    idx = np.arange(k - 1)
    m[idx, idx + 1] += -np.sqrt(n[1:] * (n[1:] + nu))
    m[np.arange(k), np.arange(k)] += n + 0.25 * (nu + 1.0) ** 2
    m -= t * (n + nu / 2.0 + 1.0 - p.aminus)[None, :]
    m -= p.aplus * q
    return -(p.lam**2 / 2.0) * m


def laguerre_hamiltonian(p: PotentialParams, cfg: LaguerreBasisConfig) -> DenseSym:
    """Checked Hamiltonian; raises AsymmetryError beyond HERMITICITY_TOL.

    The residual that remains after the check passes is pure floating
    point dust (identically zero for integer aminus with nu = 0); folding
    it through the exact involution (H + H^T)/2 satisfies the storage
    type without masking construction errors, which were already vetted.
    """
    h = assemble_hamiltonian(p, cfg)
    asym = float(np.abs(h - h.T).max())
    if asym > HERMITICITY_TOL:
        raise AsymmetryError(
            f"Hamiltonian assembly asymmetry {asym:.3e} exceeds "
            f"{HERMITICITY_TOL:.1e}; the delta/T cancellation is broken"
        )
    return DenseSym((h + h.T) / 2.0)


def laguerre_spectrum(
    p: PotentialParams, cfg: LaguerreBasisConfig, count: int
) -> Spectrum:
    """Lowest ``count`` eigenvalues of the K x K Laguerre-basis Hamiltonian."""
    if not 1 <= count <= cfg.k:
        raise ValueError(f"count must lie in 1..{cfg.k}, got {count}")
    values = eig_dense_sym(laguerre_hamiltonian(p, cfg)).values[:count]
    meta = {
        "lam": p.lam,
        "aminus": p.aminus,
        "aplus": p.aplus,
        "nu": cfg.nu,
        "basis_size": cfg.k,
    }
    return Spectrum(values, "laguerre", meta)


@dataclass(frozen=True)
class PlateauReport:
    """Stability of the spectrum against the free basis parameter nu.

    ``spectra[i]`` is the spectrum at ``nu_values[i]``; ``level_spread``
    is the per-level max - min across the whole grid.  The plateau is the
    longest contiguous index range over which every level stays within
    ``tolerance``; ties keep the earliest range.
    """

    nu_values: np.ndarray
    spectra: np.ndarray
    level_spread: np.ndarray
    tolerance: float
    plateau_start: int
    plateau_stop: int

    @property
    def plateau_nu(self) -> tuple[float, float]:
        return (
            float(self.nu_values[self.plateau_start]),
            float(self.nu_values[self.plateau_stop]),
        )

    @property
    def covers_grid(self) -> bool:
        return self.plateau_start == 0 and self.plateau_stop == self.nu_values.size - 1


def plateau_scan(
    p: PotentialParams,
    nu_grid,
    k: int,
    count: int,
    tolerance: float = 1e-6,
) -> PlateauReport:
    """Sweep nu over a grid at fixed K and report spectral stability."""
    nu_values = np.atleast_1d(np.asarray(nu_grid, dtype=float))
    if not (nu_values > -1.0).all():
        raise ValueError("every nu in the grid must exceed -1")
    spectra = np.array(
        [
            laguerre_spectrum(p, LaguerreBasisConfig(nu, k), count).energies
            for nu in nu_values
        ]
    )
    level_spread = spectra.max(axis=0) - spectra.min(axis=0)

    g = nu_values.size
    best = (0, 0)
    for i in range(g):
        for j in range(i, g):
            window = spectra[i : j + 1]
            if (window.max(axis=0) - window.min(axis=0)).max() > tolerance:
                break  # spreads only grow as the window widens
            if j - i > best[1] - best[0]:
                best = (i, j)
    return PlateauReport(
        nu_values=nu_values,
        spectra=spectra,
        level_spread=level_spread,
        tolerance=tolerance,
        plateau_start=best[0],
        plateau_stop=best[1],
    )
