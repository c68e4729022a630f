"""Bessel and Laguerre polynomial toolkits on exact coefficient vectors.

The Bessel polynomial of degree ``n`` with parameter ``mu`` is the
terminating hypergeometric series

    J_n(x) = sum_{k=0}^{n} (-n)_k (n + 2*mu + 1)_k (-1)^k x^k / k!

It is orthogonal on [0, inf) under the weight x^(2*mu) * exp(-1/x)
provided mu < -n - 1/2, with squared norm

    h_n = -n! * Gamma(-n - 2*mu) / (2n + 2*mu + 1)  > 0.

That constraint caps the usable degree at a small integer, so the
polynomials are held as dense coefficient vectors and the recursion,
differential-equation and shift identities are checked by exact
coefficient algebra instead of pointwise sampling.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad

__all__ = [
    "BesselParamSet",
    "LaguerreParamSet",
    "PolyCoeffs",
    "bessel_coeffs",
    "bessel_eval",
    "bessel_eval_sequence",
    "bessel_norm",
    "bessel_norm_log",
    "bessel_gn",
    "bessel_identity_residuals",
    "bessel_orthogonality_numeric",
    "laguerre_eval",
    "laguerre_eval_sequence",
    "laguerre_unit_norm",
]

# exp() underflows to zero below roughly -745; used to short-circuit
# envelope factors before polynomial values can overflow
LOG_UNDERFLOW = -700.0


def _require_mu(mu: float, n: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if not mu < -n - 0.5:
        raise ValueError(
            f"parameter domain violation: need mu < -n - 1/2 strictly "
            f"(mu={mu}, n={n}); the weight norm diverges at equality"
        )


@dataclass(frozen=True)
class BesselParamSet:
    """Parameter pair (mu, max degree) with the domain constraint enforced."""

    mu: float
    max_degree: int

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        _require_mu(self.mu, self.max_degree)


@dataclass(frozen=True)
class LaguerreParamSet:
    """Laguerre parameter nu, restricted to nu > -1."""

    nu: float

    def __post_init__(self):
        if not self.nu > -1.0:
            raise ValueError(f"need nu > -1, got {self.nu}")


@dataclass(frozen=True)
class PolyCoeffs:
    """Dense polynomial, index k holding the x^k coefficient."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d vector")
        if c.size > 1 and c[-1] == 0.0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x):
        return _horner(self.coeffs, x)

    def derivative(self) -> "PolyCoeffs":
        return PolyCoeffs(_deriv(self.coeffs))


def _horner(c: np.ndarray, x):
    x = np.asarray(x, dtype=float)
    r = np.full_like(x, c[-1])
    for ck in c[-2::-1]:
        r = r * x + ck
    return r if r.ndim else float(r)


def _deriv(c: np.ndarray) -> np.ndarray:
    if c.size == 1:
        return np.zeros(1)
    return c[1:] * np.arange(1, c.size)


def _xshift(c: np.ndarray, k: int = 1) -> np.ndarray:
    """Multiply by x^k."""
    return np.concatenate([np.zeros(k), c])


def _rel_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    w = max(lhs.size, rhs.size)
    a = np.zeros(w)
    a[: lhs.size] = lhs
    b = np.zeros(w)
    b[: rhs.size] = rhs
    scale = max(np.abs(a).max(), np.abs(b).max())
    if scale == 0.0:
        return 0.0
    return float(np.abs(a - b).max() / scale)


def bessel_coeffs(mu: float, n: int) -> PolyCoeffs:
    """Coefficients of J_n: x^k carries (-n)_k (n+2*mu+1)_k (-1)^k / k!."""
    _require_mu(mu, n)
    c = np.empty(n + 1)
    c[0] = 1.0
    term = 1.0
    for k in range(1, n + 1):
        term *= (-n + k - 1) * (n + 2.0 * mu + k) * (-1.0) / k
        c[k] = term
    return PolyCoeffs(c)


def bessel_eval(mu: float, n: int, x) -> float:
    """Horner evaluation of J_n at x (natural domain x >= 0)."""
    return bessel_coeffs(mu, n)(x)


def bessel_eval_sequence(mu: float, nmax: int, x) -> np.ndarray:
    """J_0 .. J_nmax at x via the three-term upward recursion.

    Independent of the coefficient route, which makes it both the
    consistency check for :func:`bessel_eval` and the cheap way to get a
    whole sequence at once for wavefunction synthesis.
    """
    _require_mu(mu, nmax)
    x = np.asarray(x, dtype=float)
    out = np.zeros((nmax + 1,) + x.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + 2.0 * (mu + 1.0) * x
    for n in range(1, nmax):
        c = (n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0) / (n + 2.0 * mu + 1.0)
        out[n + 1] = (
            (2.0 * x + mu / ((n + mu) * (n + mu + 1.0))) * out[n]
            + n / ((n + mu) * (2.0 * n + 2.0 * mu + 1.0)) * out[n - 1]
        ) * c
    return out


def bessel_norm_log(mu: float, n: int) -> float:
    """log of the squared weight norm of J_n (always defined)."""
    _require_mu(mu, n)
    return (
        math.lgamma(n + 1.0)
        + math.lgamma(-n - 2.0 * mu)
        - math.log(-(2.0 * n + 2.0 * mu + 1.0))
    )


def bessel_norm(mu: float, n: int) -> float:
    """Squared weight norm -n! Gamma(-n-2*mu) / (2n+2*mu+1), positive."""
    lg = bessel_norm_log(mu, n)
    if lg > 709.0:
        raise OverflowError(
            f"norm overflows double precision (log value {lg:.1f}); "
            f"use bessel_norm_log"
        )
    return math.exp(lg)


def bessel_gn(mu: float, n: int) -> float:
    """Unit-norm prefactor G_n = 1/sqrt(norm)."""
    return math.exp(-0.5 * bessel_norm_log(mu, n))


def bessel_identity_residuals(mu: float, nmax: int) -> dict[str, float]:
    """Verify the Bessel-polynomial identities in coefficient space.

    Checked for every degree where all members stay inside the valid
    family (mu < -nmax - 1/2 guarantees the mu+1 and mu-1 shifted
    polynomials that appear are themselves valid):

    - ``recursion``: three-term recursion for 2x*J_n, n <= nmax-1
    - ``ode``: x^2 J'' + (1 + 2(mu+1)x) J' = n(n+2mu+1) J, n <= nmax
    - ``forward_shift``: d/dx J_n = n(n+2mu+1) J_{n-1} at mu+1, n <= nmax
    - ``backward_shift``: x^2 d/dx J_n = -(2mu x + 1) J_n + J_{n+1} at
      mu-1, n <= nmax
    - ``connection``: 2 J_{n+1} at mu-1 expanded over J_{n-1}, J_n,
      J_{n+1}, n <= nmax-1
    - ``backward_shift_expanded``: 2 x^2 d/dx J_n over the same triple,
      n <= nmax-1

    Returns a dict of maximum coefficient residuals, each relative to the
    largest coefficient involved in that identity.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    _require_mu(mu, nmax)
    J = [bessel_coeffs(mu, n).coeffs for n in range(nmax + 1)]
    Jup = [bessel_coeffs(mu + 1.0, n).coeffs for n in range(nmax)]
    Jdn = [bessel_coeffs(mu - 1.0, n).coeffs for n in range(nmax + 2)]
    zero = np.zeros(1)
    worst: dict[str, float] = {}

    def note(key, r):
        worst[key] = max(worst.get(key, 0.0), r)

    for n in range(nmax + 1):
        nm = n + mu
        if n <= nmax - 1:
            lhs = 2.0 * _xshift(J[n])
            rhs = _combine(
                (-mu / (nm * (nm + 1.0)), J[n]),
                (-n / (nm * (2.0 * nm + 1.0)), J[n - 1] if n >= 1 else zero),
                ((n + 2.0 * mu + 1.0) / ((nm + 1.0) * (2.0 * nm + 1.0)), J[n + 1]),
            )
            note("recursion", _rel_residual(lhs, rhs))

        d1 = _deriv(J[n])
        lhs = _combine(
            (1.0, _xshift(_deriv(d1), 2)),
            (1.0, d1),
            (2.0 * (mu + 1.0), _xshift(d1)),
        )
        rhs = n * (n + 2.0 * mu + 1.0) * J[n]
        note("ode", _rel_residual(lhs, rhs))

        rhs = n * (n + 2.0 * mu + 1.0) * Jup[n - 1] if n >= 1 else zero
        note("forward_shift", _rel_residual(d1, rhs))

        lhs = _xshift(d1, 2)
        rhs = _combine(
            (-2.0 * mu, _xshift(J[n])),
            (-1.0, J[n]),
            (1.0, Jdn[n + 1]),
        )
        note("backward_shift", _rel_residual(lhs, rhs))

        if n <= nmax - 1:
            lhs = 2.0 * Jdn[n + 1]
            rhs = _combine(
                ((n + 1.0) * (n + 2.0 * mu) / (nm * (nm + 1.0)), J[n]),
                (n * (n + 1.0) / (nm * (2.0 * nm + 1.0)), J[n - 1] if n >= 1 else zero),
                (
                    (n + 2.0 * mu) * (n + 2.0 * mu + 1.0)
                    / ((nm + 1.0) * (2.0 * nm + 1.0)),
                    J[n + 1],
                ),
            )
            note("connection", _rel_residual(lhs, rhs))

            lhs = 2.0 * _xshift(d1, 2)
            fac = n * (n + 2.0 * mu + 1.0)
            rhs = _combine(
                (-fac / (nm * (nm + 1.0)), J[n]),
                (fac / (nm * (2.0 * nm + 1.0)), J[n - 1] if n >= 1 else zero),
                (fac / ((nm + 1.0) * (2.0 * nm + 1.0)), J[n + 1]),
            )
            note("backward_shift_expanded", _rel_residual(lhs, rhs))

    return worst


def _combine(*terms):
    """Sum of (scalar, coeff-vector) products, zero-padded to a common length."""
    w = max(c.size for _, c in terms)
    out = np.zeros(w)
    for s, c in terms:
        out[: c.size] += s * c
    return out


def bessel_orthogonality_numeric(mu: float, n: int, m: int) -> float:
    """Weighted overlap of J_n and J_m on [0, inf) by adaptive quadrature.

    The substitution x = exp(t) maps the integral onto the whole real
    line where both ends decay (super-exponentially on the left through
    exp(-exp(-t)), exponentially on the right because
    2*mu + 1 + n + m < 0).  Equals bessel_norm(mu, n) * delta_{nm}.
    """
    _require_mu(mu, max(n, m))
    cn = bessel_coeffs(mu, n).coeffs
    cm = bessel_coeffs(mu, m).coeffs
    rn = cn[::-1].copy()
    rm = cm[::-1].copy()
    two_mu_p1 = 2.0 * mu + 1.0

    def integrand(t):
        arg = two_mu_p1 * t - (math.exp(-t) if t > LOG_UNDERFLOW else math.inf)
        if arg < LOG_UNDERFLOW:
            return 0.0
        if t <= 0.0:
            x = math.exp(t)
            return math.exp(arg) * _horner(cn, x) * _horner(cm, x)
        # large x: factor out the leading powers, p(x) = x^deg q(1/x),
        # so nothing overflows while the weight still decays
        u = math.exp(-t)
        total = arg + (n + m) * t
        if total < LOG_UNDERFLOW:
            return 0.0
        return math.exp(total) * _horner(rn, u) * _horner(rm, u)

    scale = math.exp(0.5 * (bessel_norm_log(mu, n) + bessel_norm_log(mu, m)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, err = quad(
            integrand, -np.inf, np.inf, epsabs=1e-12 * scale, epsrel=1e-12, limit=400
        )
    if err > 1e-9 * max(abs(value), scale):
        raise RuntimeError(
            f"orthogonality quadrature did not converge: error estimate "
            f"{err:.3e} against scale {scale:.3e}"
        )
    return value


def laguerre_eval(nu: float, n: int, x) -> float:
    """Laguerre polynomial L_n at x by upward recursion."""
    return laguerre_eval_sequence(nu, n, x)[n]


def laguerre_eval_sequence(nu: float, nmax: int, x) -> np.ndarray:
    """L_0 .. L_nmax at x, from L_0 = 1 and L_1 = nu + 1 - x upward."""
    if nmax < 0:
        raise ValueError("degree must be non-negative")
    if not nu > -1.0:
        raise ValueError(f"need nu > -1, got {nu}")
    x = np.asarray(x, dtype=float)
    out = np.zeros((nmax + 1,) + x.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = nu + 1.0 - x
    for n in range(1, nmax):
        out[n + 1] = ((2.0 * n + nu + 1.0 - x) * out[n] - (n + nu) * out[n - 1]) / (
            n + 1.0
        )
    return out


def laguerre_unit_norm(nu: float, n: int) -> float:
    """Normalization sqrt(n! / Gamma(n + nu + 1)) for the weight y^nu e^-y."""
    if not nu > -1.0:
        raise ValueError(f"need nu > -1, got {nu}")
    return math.exp(0.5 * (math.lgamma(n + 1.0) - math.lgamma(n + nu + 1.0)))
