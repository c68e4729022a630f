"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines in order.
"""

import math

import numpy as np
import pytest
from mpmath import mp, mpf
from mpmath import factorial as mp_factorial
from mpmath import gamma as mp_gamma
from mpmath import sqrt as mp_sqrt
from scipy.integrate import quad

from expwell import (
    LaguerreBasisConfig,
    PotentialParams,
    bessel_identity_residuals,
    bessel_norm,
    bessel_norm_log,
    bessel_orthogonality_numeric,
    eig_tridiag,
    gauss_laguerre_quadrature,
    laguerre_spectrum,
    laguerre_t_matrix,
    morse_spectrum,
    morse_wavefunction,
    plateau_scan,
    tra_capacity,
    tra_hamiltonian,
    tra_recursion_coeffs,
    tra_spectrum,
)
from expwell import cli
from expwell.laguerre_basis import assemble_hamiltonian
from reference_values import (
    LAGUERRE_AMINUS6,
    LAGUERRE_APLUS2,
    MORSE_AMINUS6,
    TRA_AMINUS6,
    TRA_APLUS2,
)

K100 = LaguerreBasisConfig(0.0, 100)


def _report(num: int, name: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")


def test_criterion_01_morse_closed_form():
    got = morse_spectrum(1.0, 6.0).energies
    dev = np.abs(got - np.array(MORSE_AMINUS6)).max()
    _report(1, "morse closed form", dev <= 1e-12, f"max dev {dev:.2e}")
    assert dev <= 1e-12


def test_criterion_02_tra_tables():
    worst = 0.0
    for aminus, expected in TRA_APLUS2.items():
        got = tra_spectrum(PotentialParams(1.0, aminus, 2.0)).energies
        worst = max(worst, np.abs(got - expected).max())
    for aplus in (4.0, 8.0, 12.0):
        got = tra_spectrum(PotentialParams(1.0, 6.0, aplus)).energies
        worst = max(worst, np.abs(got - TRA_AMINUS6[aplus]).max())
    _report(2, "tridiagonal-representation tables", worst <= 5e-7,
            f"max cell dev {worst:.2e}")
    assert worst <= 5e-7


def test_criterion_03_laguerre_tables():
    worst = 0.0
    for aminus, expected in LAGUERRE_APLUS2.items():
        got = laguerre_spectrum(PotentialParams(1.0, aminus, 2.0), K100, 8).energies
        worst = max(worst, np.abs(got - expected).max())
    for aplus, expected in LAGUERRE_AMINUS6.items():
        got = laguerre_spectrum(PotentialParams(1.0, 6.0, aplus), K100, 6).energies
        worst = max(worst, np.abs(got - expected).max())
    _report(3, "laguerre-basis tables", worst <= 1e-5, f"max cell dev {worst:.2e}")
    assert worst <= 1e-5


def test_criterion_04_cross_method_degradation():
    p = PotentialParams(1.0, 8.0, 2.0)
    e_tra = tra_spectrum(p).energies
    e_lag = laguerre_spectrum(p, K100, e_tra.size).energies
    diff = np.abs(e_tra - e_lag)
    low_ok = diff[:4].max() < 1e-5
    high_ok = diff[6] > 1e-3
    _report(4, "cross-method degradation", low_ok and high_ok,
            f"n<=3 max {diff[:4].max():.2e}, n=6 {diff[6]:.2e}")
    assert low_ok and high_ok


def test_criterion_05_identity_suite():
    worst = 0.0
    for mu in (-6.5, -8.0, -10.0):
        # degrees cap at the strict domain constraint mu < -n - 1/2, so
        # mu = -6.5 checks n <= 5 (equality is rejected by the family)
        nmax = min(6, math.ceil(-mu - 0.5) - 1)
        worst = max(worst, max(bessel_identity_residuals(mu, nmax).values()))
    _report(5, "coefficient-level identity suite", worst <= 1e-10,
            f"max rel residual {worst:.2e}")
    assert worst <= 1e-10


def test_criterion_06_orthogonality_gram():
    mu = -8.0
    worst = 0.0
    for n in range(6):
        for m in range(n, 6):
            value = bessel_orthogonality_numeric(mu, n, m)
            expected = bessel_norm(mu, n) if n == m else 0.0
            scale = math.exp(0.5 * (bessel_norm_log(mu, n) + bessel_norm_log(mu, m)))
            worst = max(worst, abs(value - expected) / scale)
    _report(6, "weighted orthogonality gram", worst <= 1e-8,
            f"max rel residual {worst:.2e}")
    assert worst <= 1e-8


def test_criterion_07_quadrature_exactness():
    rule = gauss_laguerre_quadrature(0.0, 100)
    t = laguerre_t_matrix(0.0, 100).to_dense()
    moment = np.abs((rule.vectors * rule.nodes[None, :]) @ rule.vectors.T - t).max()
    identity = np.abs(rule.vectors @ rule.vectors.T - np.eye(100)).max()
    worst = max(moment, identity)
    _report(7, "quadrature exactness", worst <= 1e-12,
            f"first moment {moment:.2e}, identity {identity:.2e}")
    assert worst <= 1e-12


def test_criterion_08_hermiticity():
    worst = 0.0
    param_sets = [PotentialParams(1.0, am, 2.0) for am in (8.0, 6.0, 4.0)]
    param_sets += [PotentialParams(1.0, 6.0, ap) for ap in (0.0, 4.0, 8.0, 12.0)]
    for p in param_sets:
        h = assemble_hamiltonian(p, K100)
        worst = max(worst, float(np.abs(h - h.T).max()))
    _report(8, "hamiltonian hermiticity", worst <= 1e-12, f"max asym {worst:.2e}")
    assert worst <= 1e-12


def test_criterion_09_plateau_of_stability():
    nu_grid = (-0.5, 0.0, 0.5, 1.0, 2.0)
    spread100 = 0.0
    spread20 = 0.0
    for aplus in (0.0, 4.0, 8.0, 12.0):
        p = PotentialParams(1.0, 6.0, aplus)
        spread100 = max(
            spread100, float(plateau_scan(p, nu_grid, 100, 6).level_spread.max())
        )
        spread20 = max(
            spread20, float(plateau_scan(p, nu_grid, 20, 6).level_spread.max())
        )
    stable_ok = spread100 <= 1e-6
    widen_ok = spread20 > spread100
    _report(9, "plateau of stability", stable_ok and widen_ok,
            f"K=100 spread {spread100:.2e} (tol 1e-06), K=20 spread {spread20:.2e}")
    # the near-threshold levels (4 and 5) converge too slowly in K for the
    # 1e-6 agreement to hold at K = 100 for every nu in the grid; the
    # stable_ok clause records that honestly rather than loosening it
    assert widen_ok, "spread must widen as K shrinks"
    assert stable_ok, (
        f"lowest-6-level nu-spread at K=100 is {spread100:.3e} > 1e-6; "
        f"levels 0..3 do satisfy 1e-6 (see verify report); the excess sits "
        f"entirely in the slowly-converging near-threshold levels"
    )


def test_criterion_10_morse_wavefunction_orthonormality():
    worst = 0.0
    for n in range(5):
        for m in range(n, 5):
            value, _ = quad(
                lambda x, n=n, m=m: float(
                    morse_wavefunction(1.0, 6.0, n, [x]).psi[0]
                    * morse_wavefunction(1.0, 6.0, m, [x]).psi[0]
                ),
                -np.inf,
                np.inf,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=300,
            )
            worst = max(worst, abs(value - (1.0 if n == m else 0.0)))
    _report(10, "morse wavefunction gram", worst <= 1e-8, f"max dev {worst:.2e}")
    assert worst <= 1e-8


def _reference_coefficient_vectors(aminus, aplus):
    """60-digit oracle mapping each eigenvalue to its coefficient vector.

    The forward three-term recursion cannot resolve the tiny tail
    components of the low-lying states in double precision (the decaying
    solution drowns in the dominant one), so both the eigenvalue
    refinement (Sturm bisection) and the recursion run at 60 digits.
    """
    mp.dps = 60
    d = tra_capacity(aminus)
    mu = -mpf(aminus)
    gam = -4 / mpf(aplus)
    pref = mpf(aplus) / 8  # lam = 1
    a = [
        -2 * mu / ((n + mu) * (n + mu + 1)) - (4 / mpf(aplus)) * (n + mu + mpf(1) / 2) ** 2
        for n in range(d)
    ]
    b2 = [
        (-(n + 1) * (n + 2 * mu + 1) / ((n + mu + mpf(1) / 2) * (n + mu + mpf(3) / 2)))
        / (n + mu + 1) ** 2
        for n in range(d - 1)
    ]

    def count_below(x):
        cnt = 0
        t = pref * a[0] - x
        if t < 0:
            cnt += 1
        for i in range(1, d):
            t = pref * a[i] - x - (pref * pref * b2[i - 1]) / t
            if t < 0:
                cnt += 1
        return cnt

    gn = [
        mp_sqrt(-(2 * n + 2 * mu + 1) / (mp_factorial(n) * mp_gamma(-n - 2 * mu)))
        for n in range(d)
    ]
    out = []
    for k in range(d):
        lo, hi = mpf(-200), mpf(200)
        for _ in range(220):
            mid = (lo + hi) / 2
            if count_below(mid) >= k + 1:
                hi = mid
            else:
                lo = mid
        z = 8 * ((lo + hi) / 2) / mpf(aplus)
        bvals = [mpf(1)]
        prev = mpf(0)
        for n in range(d - 1):
            nm = n + mu
            diag = -2 * mu / (nm * (nm + 1)) + gam * (nm + mpf(1) / 2) ** 2
            down = n / (nm * (nm + mpf(1) / 2)) if n else mpf(0)
            nxt = ((z - diag) * bvals[n] + down * prev) * (nm + 1) * (nm + mpf(1) / 2) / (
                n + 2 * mu + 1
            )
            prev = bvals[n]
            bvals.append(nxt)
        coeff = [gn[n] * bvals[n] for n in range(d)]
        norm = mp_sqrt(sum(c * c for c in coeff))
        out.append(np.array([float(c / norm) for c in coeff]))
    return out


def test_criterion_11_eigenvector_recursion_duality():
    p = PotentialParams(1.0, 8.0, 2.0)
    res = eig_tridiag(tra_hamiltonian(p), want_vectors=True)
    refs = _reference_coefficient_vectors(8.0, 2.0)
    worst = 0.0
    for k, coeff in enumerate(refs):
        v = res.vectors[:, k]
        anchor = int(np.argmax(np.abs(coeff)))
        ratios = v / coeff
        dev = float(np.abs(ratios / ratios[anchor] - 1.0).max())
        worst = max(worst, dev)
    _report(11, "eigenvector/recursion duality", worst <= 1e-8,
            f"max ratio dev {worst:.2e}")
    assert worst <= 1e-8


def test_criterion_12_byte_exact_tables(tmp_path):
    d1 = tmp_path / "run1"
    d2 = tmp_path / "run2"
    assert cli.main(["tables", "--out", str(d1)]) == 0
    assert cli.main(["tables", "--out", str(d2)]) == 0
    names = ("table1.csv", "table2.csv", "table3.csv", "table4.csv")
    same = all((d1 / n).read_bytes() == (d2 / n).read_bytes() for n in names)
    _report(12, "byte-exact table regeneration", same, f"{len(names)} files compared")
    assert same


def test_recursion_coefficient_signs_documented():
    # companion to criterion 11: the Hamiltonian pairs the positive
    # formula value b_n with a negated off-diagonal entry, so the
    # eigenvectors track G_n B_n without sign alternation
    p = PotentialParams(1.0, 8.0, 2.0)
    h = tra_hamiltonian(p)
    _, b0 = tra_recursion_coeffs(p, 0)
    assert b0 > 0.0
    assert h.off[0] == pytest.approx(-(1.0 * 2.0 / 8.0) * b0, rel=1e-15)
