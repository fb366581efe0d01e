"""
Finite-N weak-classical-limit harness.

A coherent state matched to h = 1/N is projected onto the combs, evolved with
the propagator and measured with a torus harmonic; the result is compared with
the harmonic evaluated at the classical image of the packet centre.
"""

import math
from typing import List, Sequence

import numpy as np

from infrastructure.config.settings import get_config
from infrastructure.monitoring.logging_service import get_logger, log_execution_time
from services.classical_service import TorusPoint, orbit, torus_baker
from services.kinematics_service import PlanckLike, as_planck, harmonic_observable
from services.propagator_service import PropagatorVariant, cached_propagator
from services.semiclassics_service.coherent_states import coherent_wavefunction
from services.semiclassics_service.models import (
    CoherentStateParams,
    CombProjectionError,
    LimitScanRow,
    ScanParameterError,
)

logger = get_logger(__name__)


def project_to_comb(params: CoherentStateParams, n: PlanckLike) -> np.ndarray:
    """
    Normalised comb coefficients c_m proportional to sum_k phi(m/N + k).

    Periodic images are kept while the Gaussian factor exceeds the lattice
    tail mass.

    Args:
        params: Packet with hbar = 1/(2 pi N) and x0 in (0, 1)
        n: Dimension N or a PlanckParams

    Returns:
        Unit-norm complex vector of length N

    Raises:
        CombProjectionError: On an hbar mismatch, x0 outside (0, 1) or zero weight
    """
    N = as_planck(n).n
    matched = 1.0 / (2.0 * math.pi * N)
    if abs(params.hbar - matched) > 1e-12 * matched:
        raise CombProjectionError(
            f"hbar must equal 1/(2 pi N) = {matched:.17g} for N={N}, got {params.hbar:.17g}"
        )
    if not 0.0 < params.x0 < 1.0:
        raise CombProjectionError(f"x0 must lie strictly inside (0, 1), got {params.x0}")

    # Sample the packet and its periodic images on the lattice m/N
    reach = math.sqrt(-2.0 * params.hbar * math.log(get_config().lattice.tail_mass))
    images = np.arange(math.floor(params.x0 - reach) - 1, math.ceil(params.x0 + reach) + 2)
    points = np.arange(N)[:, None] / N + images[None, :]
    coefficients = np.sum(coherent_wavefunction(params, points), axis=1)

    # Normalize
    norm = np.linalg.norm(coefficients)
    if not norm > 0:
        raise CombProjectionError(f"Packet at x0={params.x0} has no weight on the combs")
    return coefficients / norm


def _validate_scan(x0: float, p0: float, n_list: Sequence[int], steps: int) -> List[int]:
    if not (0.0 <= x0 < 1.0 and 0.0 <= p0 < 1.0):
        raise ScanParameterError(f"(x0, p0) must lie on the unit torus, got ({x0}, {p0})")
    if x0 in (0.0, 0.5) or p0 == 0.0:
        raise ScanParameterError(
            f"(x0, p0) = ({x0}, {p0}) lies on a region boundary; pick a generic point"
        )
    if steps < 1:
        raise ScanParameterError(f"steps must be at least 1, got {steps}")
    if not n_list:
        raise ScanParameterError("N list is empty")

    dims = [as_planck(n).n for n in n_list]
    if any(later <= earlier for earlier, later in zip(dims, dims[1:])):
        raise ScanParameterError(f"N list must be strictly ascending, got {dims}")
    return dims


def weak_limit_scan(x0: float, p0: float, a: int, b: int, n_list: Sequence[int],
                    variant=PropagatorVariant.CORRECTED, steps: int = 1) -> List[LimitScanRow]:
    """
    Quantum against classical expectation of exp(2 pi i (a x + b p)) after
    ``steps`` applications of the map, one row per N.

    Args:
        x0: Packet centre position, in (0, 1) and not 1/2
        p0: Packet centre momentum, in (0, 1)
        a: Harmonic exponent on x
        b: Harmonic exponent on p
        n_list: Strictly ascending even dimensions
        variant: Propagator used for the evolution
        steps: Number of map applications, at least 1

    Returns:
        One LimitScanRow per N with the quantum and classical values

    Raises:
        ScanParameterError: For boundary points, bad steps or a bad N list
    """
    dims = _validate_scan(x0, p0, n_list, steps)

    # Classical reference is independent of N
    image = orbit(torus_baker, TorusPoint(x0, p0), steps)[-1]
    classical = complex(np.exp(2j * math.pi * (a * image.x + b * image.p)))

    rows = []
    with log_execution_time(logger, "weak limit scan", x0=x0, p0=p0, a=a, b=b, steps=steps):
        for N in dims:
            # Prepare, evolve, measure
            psi = project_to_comb(CoherentStateParams.for_dimension(x0, p0, N), N)
            F = cached_propagator(variant, N)
            for _ in range(steps):
                psi = F @ psi
            quantum = complex(np.vdot(psi, harmonic_observable(N, a, b) @ psi))
            rows.append(LimitScanRow(n=N, quantum_value=quantum, classical_value=classical))
    return rows
