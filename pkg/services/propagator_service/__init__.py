"""
Propagator service - corrected and Balazs-Voros baker propagators, the closed
form, variant comparison, the operator-pipeline oracle and eigenphases.
"""

from .models import (
    NonUnitaryError,
    OddEntry,
    PipelineState,
    PropagatorVariant,
    SectorSpectra,
    VariantComparison,
)
from .builders import (
    CLOSED_FORM_PREFACTOR,
    build,
    build_bv,
    build_corrected,
    cached_propagator,
    closed_form_entry,
    compare_variants,
    phase_decay_profile,
    propagator_entry,
    unitarity_residual,
)
from .pipeline import (
    build_via_pipeline,
    momentum_cut,
    position_cut,
    propagate_comb,
    stretch,
)
from .spectrum import parity_sector_spectra, spectrum

__all__ = [
    'CLOSED_FORM_PREFACTOR',
    'NonUnitaryError',
    'OddEntry',
    'PipelineState',
    'PropagatorVariant',
    'SectorSpectra',
    'VariantComparison',
    'build',
    'build_bv',
    'build_corrected',
    'build_via_pipeline',
    'cached_propagator',
    'closed_form_entry',
    'compare_variants',
    'momentum_cut',
    'parity_sector_spectra',
    'phase_decay_profile',
    'position_cut',
    'propagate_comb',
    'propagator_entry',
    'spectrum',
    'stretch',
    'unitarity_residual',
]
