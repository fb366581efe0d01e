"""
Classical service - baker dynamics on the torus, the covering map, region
bookkeeping and the classical parity symmetry.
"""

from .models import (
    BoundaryPointError,
    ClassicalMapError,
    PlanePoint,
    RegionLabel,
    TorusPoint,
)
from .baker_map import (
    classify,
    cover_baker,
    cover_baker_arrays,
    cover_baker_inverse,
    cover_baker_inverse_arrays,
    on_pullback_boundary,
    orbit,
    parity_point,
    pullback_harmonic,
    pullback_harmonic_array,
    region_mask,
    torus_baker,
    torus_baker_arrays,
)

__all__ = [
    'BoundaryPointError',
    'ClassicalMapError',
    'PlanePoint',
    'RegionLabel',
    'TorusPoint',
    'classify',
    'cover_baker',
    'cover_baker_arrays',
    'cover_baker_inverse',
    'cover_baker_inverse_arrays',
    'on_pullback_boundary',
    'orbit',
    'parity_point',
    'pullback_harmonic',
    'pullback_harmonic_array',
    'region_mask',
    'torus_baker',
    'torus_baker_arrays',
]
