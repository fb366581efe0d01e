"""
Semiclassics service - coherent states, expectation values of torus
harmonics, projection norms, projector non-commutativity and the finite-N
weak-classical-limit scan.
"""

from .models import (
    CoherentStateParams,
    CombProjectionError,
    InsufficientTermsError,
    LimitScanRow,
    QuadratureConvergenceError,
    ScanParameterError,
)
from .coherent_states import (
    coherent_momentum_wavefunction,
    coherent_wavefunction,
    expect_harmonic_closed_form,
    expect_harmonic_continuum,
    wavefunction_norm,
)
from .projections import (
    NONCOMMUTE_LIMIT,
    default_k_max,
    noncommute_demo,
    noncommute_limit,
    projection_norm,
)
from .limit_scan import project_to_comb, weak_limit_scan

__all__ = [
    'CoherentStateParams',
    'CombProjectionError',
    'InsufficientTermsError',
    'LimitScanRow',
    'NONCOMMUTE_LIMIT',
    'QuadratureConvergenceError',
    'ScanParameterError',
    'coherent_momentum_wavefunction',
    'coherent_wavefunction',
    'default_k_max',
    'expect_harmonic_closed_form',
    'expect_harmonic_continuum',
    'noncommute_demo',
    'noncommute_limit',
    'project_to_comb',
    'projection_norm',
    'wavefunction_norm',
    'weak_limit_scan',
]
