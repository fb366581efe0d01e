"""
Eigenphases of unitary propagators.
"""

import numpy as np
from scipy.linalg import schur

from infrastructure.config.settings import get_thresholds
from infrastructure.monitoring.logging_service import get_logger
from services.kinematics_service import DimensionError, parity_matrix
from services.propagator_service.builders import unitarity_residual
from services.propagator_service.models import NonUnitaryError, SectorSpectra

logger = get_logger(__name__)


def spectrum(M: np.ndarray) -> np.ndarray:
    """
    Eigenphases in [0, 2 pi) from the complex Schur form, sorted ascending.

    Phases within the snap tolerance of 2 pi are reported as 0. Ties keep the
    order of the Schur diagonal.

    Args:
        M: Square unitary matrix

    Returns:
        1-D array of N phases

    Raises:
        DimensionError: If M is not square
        NonUnitaryError: If M fails the spectrum unitarity threshold
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        return np.zeros(0)

    # Reject non-unitary input before reading phases off the diagonal
    thresholds = get_thresholds()
    residual = unitarity_residual(M)
    if residual > thresholds.spectrum_unitarity:
        raise NonUnitaryError(residual, thresholds.spectrum_unitarity)

    # Schur form is triangular; its diagonal holds the eigenvalues
    T, _ = schur(M, output="complex")
    phases = np.mod(np.angle(np.diag(T)), 2.0 * np.pi)
    phases[np.abs(phases) < thresholds.phase_snap] = 0.0
    phases[phases > 2.0 * np.pi - thresholds.phase_snap] = 0.0

    order = np.lexsort((np.arange(phases.size), phases))
    return phases[order]


def _parity_bases(N: int):
    """Orthonormal bases of the parity-even and parity-odd comb subspaces"""
    even_cols, odd_cols = [], []
    for m in range(N // 2 + 1):
        partner = (-m) % N
        if partner == m:
            vec = np.zeros(N)
            vec[m] = 1.0
            even_cols.append(vec)
        else:
            plus = np.zeros(N)
            minus = np.zeros(N)
            plus[m], plus[partner] = 1.0, 1.0
            minus[m], minus[partner] = 1.0, -1.0
            even_cols.append(plus / np.sqrt(2.0))
            odd_cols.append(minus / np.sqrt(2.0))
    even = np.column_stack(even_cols)
    odd = np.column_stack(odd_cols) if odd_cols else np.zeros((N, 0))
    return even, odd


def parity_sector_spectra(F: np.ndarray, tolerance: float = 1e-10) -> SectorSpectra:
    """
    Eigenphases of F on the parity-even and parity-odd subspaces

    Args:
        F: Square operator commuting with comb parity
        tolerance: Largest accepted max |P F P - F|

    Returns:
        SectorSpectra with sorted even and odd phases

    Raises:
        ValueError: If F does not commute with parity
    """
    F = np.asarray(F, dtype=complex)
    N = F.shape[0]
    P = parity_matrix(N)
    residual = float(np.max(np.abs(P @ F @ P - F)))
    if residual > tolerance:
        raise ValueError(f"Operator does not commute with parity (residual {residual:.3e})")

    even, odd = _parity_bases(N)
    logger.debug("Split spectrum by parity", extra={"n": N, "even_dim": even.shape[1]})
    return SectorSpectra(
        even=spectrum(even.T @ F @ even),
        odd=spectrum(odd.T @ F @ odd),
        parity_residual=residual,
    )
