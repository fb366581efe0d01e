"""
Kinematics service - comb basis conventions, DFT and phase matrices, the Weyl
pair, parity and time reversal on the N-dimensional torus Hilbert space.
"""

from .models import (
    CombIndex,
    DimensionError,
    InvalidPlanckError,
    PlanckLike,
    PlanckN,
    ThetaPoint,
    as_planck,
)
from .operators import (
    comb_index,
    dft,
    harmonic,
    harmonic_observable,
    parity_matrix,
    time_reversal_image,
    u_matrix,
    unit_phase,
    v_matrix,
    z_matrix,
)

__all__ = [
    'CombIndex',
    'DimensionError',
    'InvalidPlanckError',
    'PlanckLike',
    'PlanckN',
    'ThetaPoint',
    'as_planck',
    'comb_index',
    'dft',
    'harmonic',
    'harmonic_observable',
    'parity_matrix',
    'time_reversal_image',
    'u_matrix',
    'unit_phase',
    'v_matrix',
    'z_matrix',
]
