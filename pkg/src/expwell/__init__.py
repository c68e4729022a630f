"""Bound states of an exponentially confining potential well.

Two independent numerical routes to the same spectrum: a small
tridiagonal representation in a Bessel-polynomial basis (quasi-exact,
capacity-limited) and a large Laguerre-basis diagonalization (the
reference numbers), with the closed-form Morse well as the common
aplus = 0 limit.  See the ``expwell`` CLI for table and figure-data
reproduction.
"""

from .eigen import (
    BACKEND,
    ConvergenceError,
    DenseSym,
    EigResult,
    SymTridiag,
    backend_name,
    eig_dense_sym,
    eig_tridiag,
)
from .laguerre_basis import (
    AsymmetryError,
    LaguerreBasisConfig,
    PlateauReport,
    QuadratureRule,
    gauss_laguerre_quadrature,
    inverse_moment_matrix,
    laguerre_hamiltonian,
    laguerre_spectrum,
    laguerre_t_matrix,
    plateau_scan,
)
from .polynomials import (
    BesselParamSet,
    LaguerreParamSet,
    PolyCoeffs,
    bessel_coeffs,
    bessel_eval,
    bessel_eval_sequence,
    bessel_gn,
    bessel_identity_residuals,
    bessel_norm,
    bessel_norm_log,
    bessel_orthogonality_numeric,
    laguerre_eval,
    laguerre_eval_sequence,
    laguerre_unit_norm,
)
from .tra import (
    MorseBranchError,
    PotentialParams,
    Spectrum,
    TraConfig,
    WavefunctionGrid,
    b_poly_sequence,
    morse_spectrum,
    morse_wavefunction,
    potential_value,
    tra_capacity,
    tra_hamiltonian,
    tra_recursion_coeffs,
    tra_spectrum,
    tra_wavefunction,
)

__version__ = "0.1.0"
