"""Exponentially confining potential well and its tridiagonal representation.

The well, in units hbar = M = 1, is

    V(x) = (lam^2 / 2) * (exp(-2 lam x)/4 - aminus exp(-lam x)
                          + aplus exp(lam x)),

hard on the left (double exponential rate) and softer on the right.  For
aplus = 0 it is the Morse well with the closed-form finite spectrum
E_n = -(lam^2/2)(n - aminus + 1/2)^2.  For aplus > 0 the wave operator
acts tridiagonally on the square-integrable basis

    phi_n(x) = G_n y^(1/2 - aminus) exp(-1/(2y)) J_n(y),   y = exp(lam x),

built on Bessel polynomials with mu = -aminus, which converts the bound
state problem into a small symmetric tridiagonal matrix.  Its size (the
capacity) is capped by the polynomial parameter constraint, so only the
lowest part of the infinite spectrum comes out, with accuracy fading
toward the top levels.  The expansion coefficients of an eigenstate are
G_n * B_n(z) with B_n from a three-term recursion in the scaled energy
z = 8 E / (lam^2 aplus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .eigen import SymTridiag, eig_tridiag
from .polynomials import LOG_UNDERFLOW, bessel_eval_sequence, bessel_gn

__all__ = [
    "MORSE_APLUS_CUTOFF",
    "MorseBranchError",
    "PotentialParams",
    "Spectrum",
    "TraConfig",
    "WavefunctionGrid",
    "b_poly_sequence",
    "morse_spectrum",
    "morse_wavefunction",
    "potential_value",
    "tra_capacity",
    "tra_hamiltonian",
    "tra_recursion_coeffs",
    "tra_spectrum",
    "tra_wavefunction",
]

# below this the recursion coefficients (which divide by aplus) are
# numerically meaningless and the closed-form Morse branch takes over
MORSE_APLUS_CUTOFF = 1e-12


class MorseBranchError(ValueError):
    """Raised when a tridiagonal-representation entry point gets aplus = 0."""


@dataclass(frozen=True)
class PotentialParams:
    """Physical triple (lam, aminus, aplus), atomic units."""

    lam: float
    aminus: float
    aplus: float

    def __post_init__(self):
        if self.lam == 0.0 or not math.isfinite(self.lam):
            raise ValueError("lam must be nonzero and finite")
        if not self.aplus >= 0.0:
            raise ValueError(f"aplus must be >= 0, got {self.aplus}")
        if not math.isfinite(self.aminus) or not math.isfinite(self.aplus):
            raise ValueError("potential parameters must be finite")


def potential_value(p: PotentialParams, x):
    """V(x); scalars broadcast, extreme arguments saturate to +/- inf."""
    t = p.lam * np.asarray(x, dtype=float)
    with np.errstate(over="ignore"):
        v = (p.lam**2 / 2.0) * (
            0.25 * np.exp(-2.0 * t) - p.aminus * np.exp(-t) + p.aplus * np.exp(t)
        )
    return v if v.ndim else float(v)


def tra_capacity(aminus: float) -> int:
    """Number of representable bound states: max {d >= 0 : d + 1/2 < aminus}.

    The strict inequality drops the half-integer edge where the basis
    norm diverges, so an integer-valued aminus - 1/2 loses one state.
    Clamps to zero when no state fits.
    """
    d = math.floor(aminus - 0.5)
    if d + 0.5 >= aminus:
        d -= 1
    return max(d, 0)


@dataclass(frozen=True)
class TraConfig:
    """Derived basis bookkeeping for a parameter set (aplus > 0)."""

    mu: float
    alpha: float
    beta: float
    capacity: int
    gamma: Optional[float]

    @classmethod
    def from_params(cls, p: PotentialParams) -> "TraConfig":
        mu = -p.aminus
        gamma = -4.0 / p.aplus if p.aplus > 0.0 else None
        return cls(
            mu=mu,
            alpha=mu + 0.5,
            beta=0.5,
            capacity=tra_capacity(p.aminus),
            gamma=gamma,
        )


@dataclass(frozen=True)
class Spectrum:
    """Ascending bound-state energies with method provenance."""

    energies: np.ndarray
    method: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        e = np.atleast_1d(np.asarray(self.energies, dtype=float))
        if e.size and not np.isfinite(e).all():
            raise ValueError("energies must be finite")
        if e.size > 1 and not (np.diff(e) >= 0).all():
            raise ValueError("energies must be ascending")
        object.__setattr__(self, "energies", e)


@dataclass(frozen=True)
class WavefunctionGrid:
    """Sampled un-normalized (or grid-normalized) state on an x grid."""

    x: np.ndarray
    psi: np.ndarray
    energy: float
    normalized: bool

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        psi = np.asarray(self.psi, dtype=float)
        if x.shape != psi.shape:
            raise ValueError("x and psi must have the same shape")
        if not np.isfinite(psi).all():
            raise ValueError("psi must be finite on the grid")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "psi", psi)


def tra_recursion_coeffs(p: PotentialParams, n: int) -> tuple[float, float]:
    """Diagonal and coupling coefficients (a_n, b_n) of the representation.

    a_n = -2 mu / ((n+mu)(n+mu+1)) - (4/aplus)(n+mu+1/2)^2 and
    b_n = -1/(n+mu+1) * sqrt(-(n+1)(n+2mu+1) / ((n+mu+1/2)(n+mu+3/2)))
    with mu = -aminus; the radicand is positive for every n below the
    capacity, which keeps b_n real.
    """
    if p.aplus <= 0.0:
        raise MorseBranchError(
            "aplus = 0 has no tridiagonal representation; use morse_spectrum"
        )
    cap = tra_capacity(p.aminus)
    if not 0 <= n <= cap - 1:
        raise ValueError(f"n must lie in 0..{cap - 1} for these parameters, got {n}")
    mu = -p.aminus
    a = -2.0 * mu / ((n + mu) * (n + mu + 1.0)) - (4.0 / p.aplus) * (n + mu + 0.5) ** 2
    radicand = -(n + 1.0) * (n + 2.0 * mu + 1.0) / ((n + mu + 0.5) * (n + mu + 1.5))
    if radicand <= 0.0:
        raise ValueError(
            f"capacity violation: coupling radicand non-positive at n={n} "
            f"(aminus={p.aminus})"
        )
    b = -1.0 / (n + mu + 1.0) * math.sqrt(radicand)
    return a, b


def b_poly_sequence(mu: float, gamma: float, z: float, count: int) -> np.ndarray:
    """B_0 .. B_{count-1} at z, solved forward from B_0 = 1, B_{-1} = 0.

    Three-term recursion

        z B_n = [-2 mu / ((n+mu)(n+mu+1)) + gamma (n+mu+1/2)^2] B_n
                - n / ((n+mu)(n+mu+1/2)) B_{n-1}
                + (n+2mu+1) / ((n+mu+1)(n+mu+1/2)) B_{n+1}.

    For gamma = 0 it collapses onto the Bessel polynomials, B_n = J_n(z/4).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not mu < -(count - 1) - 0.5:
        raise ValueError(
            f"parameter domain violation: need mu < -(count-1) - 1/2 "
            f"(mu={mu}, count={count})"
        )
    out = np.empty(count)
    out[0] = 1.0
    prev = 0.0
    for n in range(count - 1):
        nm = n + mu
        diag = -2.0 * mu / (nm * (nm + 1.0)) + gamma * (nm + 0.5) ** 2
        down = n / (nm * (nm + 0.5)) if n else 0.0
        out[n + 1] = ((z - diag) * out[n] + down * prev) * (
            (nm + 1.0) * (nm + 0.5) / (n + 2.0 * mu + 1.0)
        )
        prev = out[n]
    return out


def tra_hamiltonian(p: PotentialParams) -> SymTridiag:
    """Finite symmetric tridiagonal Hamiltonian, entries in energy units.

    diag[n] = (lam^2 aplus / 8) a_n and off[n] = -(lam^2 aplus / 8) b_n.
    The negated coupling pairs the matrix with the B_n recursion, so each
    eigenvector is componentwise proportional to {G_n B_n} at its
    eigenvalue; flipping the off-diagonal signs would leave the spectrum
    untouched but alternate the eigenvector signs against G_n B_n.
    """
    if p.aplus <= 0.0:
        raise MorseBranchError(
            "aplus = 0 has no tridiagonal representation; use morse_spectrum"
        )
    cap = tra_capacity(p.aminus)
    if cap == 0:
        raise ValueError(
            f"empty spectrum: no representable bound states for aminus={p.aminus} "
            f"(need aminus > 1/2)"
        )
    pref = p.lam**2 * p.aplus / 8.0
    coeffs = [tra_recursion_coeffs(p, n) for n in range(cap)]
    diag = pref * np.array([a for a, _ in coeffs])
    off = -pref * np.array([b for _, b in coeffs[: cap - 1]])
    return SymTridiag(diag, off)


def tra_spectrum(p: PotentialParams) -> Spectrum:
    """Bound-state energies from the tridiagonal representation.

    The eigenvalues of :func:`tra_hamiltonian` are already energies in
    atomic units.  aplus below ``MORSE_APLUS_CUTOFF`` routes to the
    closed-form Morse branch, where the representation turns diagonal.
    """
    if p.aplus < MORSE_APLUS_CUTOFF:
        spect = morse_spectrum(p.lam, p.aminus)
        spect.meta["aplus"] = p.aplus
        return spect
    cap = tra_capacity(p.aminus)
    meta = {
        "lam": p.lam,
        "aminus": p.aminus,
        "aplus": p.aplus,
        "basis_size": cap,
    }
    if cap == 0:
        meta["note"] = "no representable bound states (aminus <= 1/2)"
        return Spectrum(np.zeros(0), "tra", meta)
    values = eig_tridiag(tra_hamiltonian(p)).values
    return Spectrum(values, "tra", meta)


def morse_spectrum(lam: float, aminus: float) -> Spectrum:
    """Closed-form Morse energies E_n = -(lam^2/2)(n - aminus + 1/2)^2.

    Levels run over n >= 0 with n < aminus - 1/2 strictly; the marginal
    zero-energy index at half-integer aminus is excluded as non-bound.
    """
    levels = []
    n = 0
    while n < aminus - 0.5:
        levels.append(-(lam**2) / 2.0 * (n - aminus + 0.5) ** 2)
        n += 1
    meta = {"lam": lam, "aminus": aminus, "aplus": 0.0, "levels": len(levels)}
    return Spectrum(np.array(levels), "morse", meta)


def _envelope_log(lam: float, aminus: float, x: np.ndarray) -> np.ndarray:
    t = lam * np.asarray(x, dtype=float)
    with np.errstate(over="ignore"):
        return (0.5 - aminus) * t - 0.5 * np.exp(-t)


def morse_wavefunction(lam: float, aminus: float, n: int, xgrid) -> WavefunctionGrid:
    """Analytic bound state psi_n = G_n y^(1/2-aminus) e^(-1/(2y)) J_n(y).

    Orthonormal under lam * integral dx.  The envelope is assembled in
    log space, so the deep left tail underflows cleanly to zero.
    """
    spect = morse_spectrum(lam, aminus)
    if not 0 <= n < spect.energies.size:
        raise ValueError(
            f"state index {n} outside the bound range 0..{spect.energies.size - 1}"
        )
    mu = -aminus
    x = np.atleast_1d(np.asarray(xgrid, dtype=float))
    log_env = _envelope_log(lam, aminus, x)
    psi = np.zeros_like(log_env)
    mask = log_env > LOG_UNDERFLOW
    if mask.any():
        y = np.exp(lam * x[mask])
        jn = bessel_eval_sequence(mu, n, y)[n]
        psi[mask] = bessel_gn(mu, n) * np.exp(log_env[mask]) * jn
    return WavefunctionGrid(x, psi, float(spect.energies[n]), normalized=True)


def tra_wavefunction(
    p: PotentialParams,
    m: int,
    xgrid,
    energy: Optional[float] = None,
    normalize: bool = False,
) -> WavefunctionGrid:
    """Synthesized bound state m from the tridiagonal representation.

    psi_m(x) = e^((1/2-aminus) lam x) exp(-e^(-lam x)/2)
               * sum_n G_n B_n(z_m; gamma) J_n(e^(lam x))

    with z_m = 8 E_m / (lam^2 aplus) and gamma = -4/aplus.  The energy
    defaults to the representation's own spectrum; callers may pass a
    refined value (for instance from the Laguerre-basis evaluator).  The
    weight function of the B family is unknown, so the state comes out
    un-normalized; ``normalize=True`` applies a trapezoid-rule grid
    normalization under the measure lam * dx instead.
    """
    if p.aplus <= 0.0:
        raise MorseBranchError(
            "aplus = 0 states are the analytic Morse ones; use morse_wavefunction"
        )
    cap = tra_capacity(p.aminus)
    if not 0 <= m < cap:
        raise ValueError(f"state index {m} outside the representable range 0..{cap - 1}")
    if energy is None:
        energy = float(tra_spectrum(p).energies[m])
    z = 8.0 * energy / (p.lam**2 * p.aplus)
    mu = -p.aminus
    coeff = np.array(
        [bessel_gn(mu, n) for n in range(cap)]
    ) * b_poly_sequence(mu, -4.0 / p.aplus, z, cap)

    x = np.atleast_1d(np.asarray(xgrid, dtype=float))
    log_env = _envelope_log(p.lam, p.aminus, x)
    psi = np.zeros_like(log_env)
    mask = log_env > LOG_UNDERFLOW
    if mask.any():
        y = np.exp(p.lam * x[mask])
        jseq = bessel_eval_sequence(mu, cap - 1, y)
        psi[mask] = np.exp(log_env[mask]) * (coeff @ jseq)
    normalized = False
    if normalize:
        norm2 = abs(p.lam) * float(np.trapezoid(psi * psi, x))
        if norm2 > 0.0:
            psi = psi / math.sqrt(norm2)
            normalized = True
    return WavefunctionGrid(x, psi, energy, normalized=normalized)
