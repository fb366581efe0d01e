"""
Region projectors applied to coherent states, and the projector
non-commutativity of the box-state example.
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import ndtr, ndtri

from infrastructure.config.settings import get_config
from infrastructure.monitoring.logging_service import get_logger
from services.classical_service import RegionLabel
from services.semiclassics_service.models import CoherentStateParams, InsufficientTermsError

logger = get_logger(__name__)

# Limit of -(i/pi) sum_{k odd} overlap(pi hbar k) / k as hbar -> 0
NONCOMMUTE_LIMIT = -1j * math.log(2.0) / (2.0 * math.pi)


def projection_norm(params: CoherentStateParams, label: RegionLabel) -> float:
    """
    ||Pi phi||^2 for the projector onto a region.

    Position projectors (L, R, E_x, O_x) cut |phi(x)|^2, momentum projectors
    (B, T, E_p, O_p) cut |phi~(p)|^2. Both densities are normal with standard
    deviation sqrt(hbar/2), so the mass is a sum of ndtr differences over the
    region's coset intervals.

    Args:
        params: Coherent-state centre and hbar
        label: Region to project onto

    Returns:
        Squared norm of the projected state, in [0, 1]
    """
    label = RegionLabel(label)
    center = params.x0 if label.axis == "x" else params.p0
    sigma = params.sigma
    reach = -ndtri(get_config().lattice.tail_mass) * sigma

    # Enumerate every coset interval within reach of the centre
    lo, hi = label.interval
    period = label.period
    first = math.floor((center - reach - hi) / period)
    last = math.ceil((center + reach - lo) / period)
    starts = lo + period * np.arange(first, last + 1)
    ends = starts + (hi - lo)

    mass = ndtr((ends - center) / sigma) - ndtr((starts - center) / sigma)
    return float(np.sum(mass))


def default_k_max(hbar: float) -> int:
    """Smallest odd k with pi hbar k past the overlap support"""
    k = math.ceil(1.0 / (math.pi * hbar) + 1.0)
    return k if k % 2 else k + 1


def noncommute_demo(hbar: float, k_max: Optional[int] = None) -> Tuple[complex, complex]:
    """
    <psi| L E_p |phi> and <psi| E_p L |phi> for psi = chi[0, 1/2), phi = chi[1/2, 1).

    L phi = 0 so the second is exactly zero. The first reduces to

        -(i/pi) sum_{k odd > 0} (1/k) overlap(pi hbar k)

    where overlap(t) is the length of [0, 1/2) intersected with [1/2, 1) shifted
    by t.
    """
    if not (hbar > 0 and math.isfinite(hbar)):
        raise ValueError(f"hbar must be positive, got {hbar}")
    if k_max is None:
        k_max = default_k_max(hbar)
    if k_max < 1 or k_max % 2 == 0:
        raise InsufficientTermsError(f"k_max must be a positive odd integer, got {k_max}")
    if math.pi * hbar * k_max <= 1.0:
        raise InsufficientTermsError(
            f"k_max={k_max} stops before the overlap vanishes (need pi*hbar*k_max > 1)"
        )

    # Truncated sum over odd k
    k = np.arange(1, k_max + 1, 2, dtype=float)
    t = math.pi * hbar * k
    overlap = np.where(t <= 0.5, t, np.where(t < 1.0, 1.0 - t, 0.0))
    le_p = complex(0.0, -float(np.sum(overlap / k)) / math.pi)

    logger.debug("Projector non-commutativity", extra={"hbar": hbar, "k_max": k_max})
    return le_p, 0j


def noncommute_limit() -> complex:
    """hbar -> 0 limit of <psi| L E_p |phi>"""
    return NONCOMMUTE_LIMIT
