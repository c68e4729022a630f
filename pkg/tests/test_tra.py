import math

import numpy as np
import pytest
from scipy.integrate import quad

from expwell import (
    MorseBranchError,
    PotentialParams,
    TraConfig,
    b_poly_sequence,
    bessel_eval,
    bessel_gn,
    eig_tridiag,
    morse_spectrum,
    morse_wavefunction,
    potential_value,
    tra_capacity,
    tra_hamiltonian,
    tra_recursion_coeffs,
    tra_spectrum,
    tra_wavefunction,
)
from reference_values import MORSE_AMINUS6, TRA_AMINUS6, TRA_APLUS2


class TestPotential:
    def test_value_at_origin(self):
        p = PotentialParams(1.0, 4.0, 2.0)
        assert potential_value(p, 0.0) == pytest.approx(-0.875, abs=0.0)

    def test_bare_wall(self):
        p = PotentialParams(1.0, 0.0, 0.0)
        assert potential_value(p, 0.0) == pytest.approx(0.125, abs=0.0)

    def test_blows_up_leftwards(self):
        p = PotentialParams(1.0, 4.0, 2.0)
        assert np.isinf(potential_value(p, -400.0))

    def test_traces_ordered_by_aminus(self):
        # deeper well everywhere for larger aminus, so the six traces
        # stack top to bottom in ascending aminus order
        x = np.linspace(-3.0, 4.0, 71)
        aminus = [-4.0, 0.0, 4.0, 6.0, 8.0, 10.0]
        traces = [potential_value(PotentialParams(1.0, am, 2.0), x) for am in aminus]
        for hi, lo in zip(traces, traces[1:]):
            assert (hi > lo).all()

    def test_param_validation(self):
        with pytest.raises(ValueError):
            PotentialParams(0.0, 4.0, 2.0)
        with pytest.raises(ValueError):
            PotentialParams(1.0, 4.0, -0.5)


class TestCapacity:
    @pytest.mark.parametrize(
        "aminus,expected",
        [(8.0, 7), (6.0, 5), (4.0, 3), (0.4, 0), (0.5, 0), (1.6, 1), (6.5, 5)],
    )
    def test_values(self, aminus, expected):
        assert tra_capacity(aminus) == expected

    def test_half_integer_edge_excluded(self):
        # at aminus = d + 1/2 exactly the d-th state's norm diverges
        assert tra_capacity(7.5) == 6

    def test_config_from_params(self):
        cfg = TraConfig.from_params(PotentialParams(1.0, 8.0, 2.0))
        assert cfg.mu == -8.0
        assert cfg.alpha == -7.5
        assert cfg.beta == 0.5
        assert cfg.capacity == 7
        assert cfg.gamma == -2.0
        assert TraConfig.from_params(PotentialParams(1.0, 8.0, 0.0)).gamma is None


class TestRecursionCoeffs:
    def test_diagonal_hand_value(self):
        a0, _ = tra_recursion_coeffs(PotentialParams(1.0, 8.0, 2.0), 0)
        assert a0 == pytest.approx(16.0 / 56.0 - 2.0 * 7.5**2, rel=1e-15)

    def test_coupling_hand_values(self):
        _, b0 = tra_recursion_coeffs(PotentialParams(1.0, 8.0, 2.0), 0)
        assert b0 == pytest.approx((1.0 / 7.0) * math.sqrt(15.0 / 48.75), rel=1e-14)
        _, b1 = tra_recursion_coeffs(PotentialParams(1.0, 8.0, 2.0), 1)
        assert b1 == pytest.approx((1.0 / 6.0) * math.sqrt(28.0 / 35.75), rel=1e-14)

    def test_morse_branch_redirect(self):
        with pytest.raises(MorseBranchError):
            tra_recursion_coeffs(PotentialParams(1.0, 8.0, 0.0), 0)

    def test_range_rejected(self):
        with pytest.raises(ValueError):
            tra_recursion_coeffs(PotentialParams(1.0, 8.0, 2.0), 7)

    @pytest.mark.parametrize("aminus", [2.7, 4.0, 6.5, 8.0, 11.3])
    def test_couplings_real_up_to_capacity(self, aminus):
        p = PotentialParams(1.0, aminus, 2.0)
        for n in range(tra_capacity(aminus)):
            _, b = tra_recursion_coeffs(p, n)
            assert math.isfinite(b) and b > 0.0


class TestBPolySequence:
    def test_starts_at_one(self):
        for gamma, z in [(0.0, 1.0), (-0.5, -112.0), (-2.0, 3.7)]:
            assert b_poly_sequence(-8.0, gamma, z, 7)[0] == 1.0

    def test_gamma_zero_collapses_to_bessel(self):
        for z in (-3.0, 0.0, 1.7, 40.0):
            got = b_poly_sequence(-8.0, 0.0, z, 7)
            want = [bessel_eval(-8.0, n, z / 4.0) for n in range(7)]
            assert np.allclose(got, want, rtol=1e-12, atol=1e-12)

    def test_first_step_hand_solved(self):
        mu, gamma, z = -8.0, -0.5, -100.0
        got = b_poly_sequence(mu, gamma, z, 2)[1]
        want = (
            (z + 2.0 * mu / (mu * (mu + 1.0)) - gamma * (mu + 0.5) ** 2)
            * (mu + 1.0)
            * (mu + 0.5)
            / (2.0 * mu + 1.0)
        )
        assert got == pytest.approx(want, rel=1e-14)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            b_poly_sequence(-6.0, -0.5, 1.0, 7)


class TestHamiltonian:
    def test_leading_diagonal_entry(self):
        h = tra_hamiltonian(PotentialParams(1.0, 8.0, 2.0))
        a0, _ = tra_recursion_coeffs(PotentialParams(1.0, 8.0, 2.0), 0)
        assert h.diag[0] == pytest.approx(0.25 * a0, rel=1e-15)
        assert h.diag[0] == pytest.approx(-28.0535714, abs=5e-8)

    def test_shape_is_capacity(self):
        h = tra_hamiltonian(PotentialParams(1.0, 8.0, 2.0))
        assert h.n == 7
        assert h.off.size == 6

    def test_empty_capacity_raises(self):
        with pytest.raises(ValueError):
            tra_hamiltonian(PotentialParams(1.0, 0.4, 2.0))

    def test_morse_redirect(self):
        with pytest.raises(MorseBranchError):
            tra_hamiltonian(PotentialParams(1.0, 8.0, 0.0))

    def test_prefactor_bookkeeping(self):
        # eigenvalues of the bare coefficient matrix, scaled by
        # lam^2 aplus / 8, are exactly the spectrum energies
        p = PotentialParams(2.0, 6.0, 4.0)
        cap = tra_capacity(p.aminus)
        coeffs = [tra_recursion_coeffs(p, n) for n in range(cap)]
        from expwell import SymTridiag

        bare = SymTridiag(
            [a for a, _ in coeffs], [-b for _, b in coeffs[:-1]]
        )
        z = eig_tridiag(bare).values
        pref = p.lam**2 * p.aplus / 8.0
        energies = tra_spectrum(p).energies
        assert np.abs(pref * z - energies).max() <= 1e-12 * np.abs(energies).max()


class TestSpectra:
    @pytest.mark.parametrize("aminus", sorted(TRA_APLUS2))
    def test_reference_columns_aplus2(self, aminus):
        s = tra_spectrum(PotentialParams(1.0, aminus, 2.0))
        assert s.method == "tra"
        assert np.abs(s.energies - TRA_APLUS2[aminus]).max() <= 5e-7

    @pytest.mark.parametrize("aplus", [4.0, 8.0, 12.0])
    def test_reference_columns_aminus6(self, aplus):
        s = tra_spectrum(PotentialParams(1.0, 6.0, aplus))
        assert np.abs(s.energies - TRA_AMINUS6[aplus]).max() <= 5e-7

    def test_morse_branch_dispatch(self):
        s = tra_spectrum(PotentialParams(1.0, 6.0, 0.0))
        assert s.method == "morse"
        assert np.abs(s.energies - MORSE_AMINUS6).max() == 0.0

    def test_empty_spectrum_notes(self):
        s = tra_spectrum(PotentialParams(1.0, 0.4, 2.0))
        assert s.energies.size == 0
        assert "note" in s.meta

    def test_lambda_scaling_exact(self):
        e1 = tra_spectrum(PotentialParams(1.0, 8.0, 2.0)).energies
        e2 = tra_spectrum(PotentialParams(2.0, 8.0, 2.0)).energies
        assert np.abs(e2 - 4.0 * e1).max() <= 1e-12 * np.abs(e2).max()

    def test_morse_continuity_small_aplus(self):
        approx = tra_spectrum(PotentialParams(1.0, 6.0, 1e-6)).energies
        exact = morse_spectrum(1.0, 6.0).energies
        assert np.abs(approx - exact[: approx.size]).max() <= 1e-3

    def test_couplings_positive_within_capacity(self):
        for aminus in (1.2, 3.9, 8.0, 12.5):
            p = PotentialParams(1.0, aminus, 2.0)
            cap = tra_capacity(aminus)
            for n in range(cap - 1):
                _, b = tra_recursion_coeffs(p, n)
                assert b * b > 0.0


class TestResultTypes:
    def test_spectrum_must_ascend(self):
        from expwell import Spectrum

        with pytest.raises(ValueError):
            Spectrum(np.array([1.0, 0.5]), "tra")
        s = Spectrum(np.array([-2.0, 1.0]), "tra", {"basis_size": 2})
        assert s.meta["basis_size"] == 2

    def test_wavefunction_grid_shape_checked(self):
        from expwell import WavefunctionGrid

        with pytest.raises(ValueError):
            WavefunctionGrid(np.zeros(3), np.zeros(4), -1.0, False)
        with pytest.raises(ValueError):
            WavefunctionGrid(np.zeros(2), np.array([1.0, np.nan]), -1.0, False)


class TestMorse:
    def test_closed_form_aminus6(self):
        s = morse_spectrum(1.0, 6.0)
        assert s.method == "morse"
        assert np.abs(s.energies - MORSE_AMINUS6).max() <= 1e-12

    def test_no_states_below_half(self):
        assert morse_spectrum(1.0, 0.4).energies.size == 0

    def test_lambda_scaling(self):
        assert morse_spectrum(2.0, 6.0).energies[0] == pytest.approx(-60.5, abs=0.0)


class TestMorseWavefunction:
    def test_normalized_flag_and_energy(self):
        w = morse_wavefunction(1.0, 6.0, 0, np.linspace(-4.0, 8.0, 200))
        assert w.normalized
        assert w.energy == pytest.approx(-15.125, abs=0.0)

    def test_vanishes_at_infinity(self):
        x = np.array([-40.0, 40.0])
        for n in range(3):
            w = morse_wavefunction(1.0, 6.0, n, x)
            assert np.abs(w.psi).max() <= 1e-12

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_node_count(self, n):
        x = np.linspace(-4.0, 10.0, 4001)
        w = morse_wavefunction(1.0, 6.0, n, x)
        kept = w.psi[np.abs(w.psi) > 1e-9 * np.abs(w.psi).max()]
        nodes = int((np.sign(kept[1:]) != np.sign(kept[:-1])).sum())
        assert nodes == n

    def test_small_gram(self):
        for n, m in [(0, 0), (0, 1), (2, 2), (1, 3)]:
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
            assert value == pytest.approx(1.0 if n == m else 0.0, abs=1e-8)

    def test_index_range(self):
        with pytest.raises(ValueError):
            morse_wavefunction(1.0, 6.0, 6, [0.0])

    def test_unit_norm_under_scaled_measure(self):
        # normalization is with respect to lam * dx, also away from lam = 1
        lam = 2.0
        x = np.linspace(-4.0, 6.0, 4001)
        w = morse_wavefunction(lam, 6.0, 1, x)
        assert lam * np.trapezoid(w.psi**2, x) == pytest.approx(1.0, abs=1e-8)


class TestTraWavefunction:
    def test_decays_at_grid_extremes(self):
        p = PotentialParams(1.0, 8.0, 2.0)
        x = np.linspace(-8.0, 8.0, 3201)
        for m in range(5):
            w = tra_wavefunction(p, m, x)
            peak = np.abs(w.psi).max()
            assert abs(w.psi[0]) <= 1e-6 * peak
            assert abs(w.psi[-1]) <= 1e-6 * peak
        # the top plotted state is basis-tail limited and only reaches
        # ~7e-6 of its peak at x = +8
        w5 = tra_wavefunction(p, 5, x)
        assert abs(w5.psi[-1]) <= 1e-5 * np.abs(w5.psi).max()

    def test_coefficients_match_top_eigenvector(self):
        # the highest state is the numerically stable direction for the
        # forward recursion, so double precision suffices there; the
        # acceptance suite covers every state with a high-precision oracle
        p = PotentialParams(1.0, 8.0, 2.0)
        cap = tra_capacity(p.aminus)
        res = eig_tridiag(tra_hamiltonian(p), want_vectors=True)
        m = cap - 1
        z = 8.0 * res.values[m] / (p.lam**2 * p.aplus)
        coeff = np.array(
            [bessel_gn(-p.aminus, n) for n in range(cap)]
        ) * b_poly_sequence(-p.aminus, -4.0 / p.aplus, z, cap)
        v = res.vectors[:, m]
        ratio = v @ coeff / (coeff @ coeff)
        assert np.linalg.norm(v - ratio * coeff) <= 1e-8 * np.linalg.norm(v)

    def test_energy_override_and_normalize(self):
        p = PotentialParams(1.0, 8.0, 2.0)
        x = np.linspace(-6.0, 8.0, 1401)
        w = tra_wavefunction(p, 0, x, energy=-28.0536270, normalize=True)
        assert w.normalized
        assert abs(p.lam) * np.trapezoid(w.psi**2, x) == pytest.approx(1.0, rel=1e-10)

    def test_errors(self):
        p = PotentialParams(1.0, 8.0, 2.0)
        with pytest.raises(ValueError):
            tra_wavefunction(p, 7, [0.0])
        with pytest.raises(MorseBranchError):
            tra_wavefunction(PotentialParams(1.0, 8.0, 0.0), 0, [0.0])
