"""
Quantum baker's map propagators at theta = (0, 0).

    corrected:  F = Z (F^N)^-1 blockdiag(F^{N/2}, -F^{N/2}) Z^-2
    bv:         F = (F^N)^-1 blockdiag(F^{N/2}, F^{N/2})

(F^N)^-1 is always the conjugate transpose of the DFT matrix.
"""

from functools import lru_cache
from typing import Union

import numpy as np
from scipy.linalg import block_diag

from infrastructure.monitoring.logging_service import get_logger
from services.kinematics_service import PlanckLike, as_planck, dft, unit_phase, z_matrix
from services.propagator_service.models import (
    OddEntry,
    PropagatorVariant,
    VariantComparison,
)

logger = get_logger(__name__)

# Prefactor of the odd-row closed form, matched against build_corrected
CLOSED_FORM_PREFACTOR = "sqrt(2)/N"

VariantLike = Union[str, PropagatorVariant]


def _variant(variant: VariantLike) -> PropagatorVariant:
    return variant if isinstance(variant, PropagatorVariant) else PropagatorVariant.parse(variant)


def _core(N: int, variant: PropagatorVariant) -> np.ndarray:
    """(F^N)^-1 times the block-diagonal half-size transforms"""
    half = dft(N // 2)
    lower = -half if variant is PropagatorVariant.CORRECTED else half
    return dft(N).conj().T @ block_diag(half, lower)


def build_bv(n: PlanckLike) -> np.ndarray:
    """
    Balazs-Voros propagator

    Args:
        n: Dimension N (even, >= 2) or a PlanckParams

    Returns:
        N x N complex unitary matrix
    """
    N = as_planck(n).n
    F = _core(N, PropagatorVariant.BALAZS_VOROS)
    logger.debug("Built Balazs-Voros propagator", extra={"n": N})
    return F


def build_corrected(n: PlanckLike) -> np.ndarray:
    """
    Corrected propagator, conjugated by the half-step phases Z and Z^-2

    Args:
        n: Dimension N (even, >= 2) or a PlanckParams

    Returns:
        N x N complex unitary matrix, parity and time-reversal symmetric
    """
    N = as_planck(n).n

    # Left factor Z scales rows, right factor Z^-2 scales columns
    Z = np.diag(z_matrix(N))
    inverse_square = unit_phase(-np.arange(N), N)
    F = Z[:, None] * _core(N, PropagatorVariant.CORRECTED) * inverse_square[None, :]
    logger.debug("Built corrected propagator", extra={"n": N})
    return F


def build(variant: VariantLike, n: PlanckLike) -> np.ndarray:
    """Dispatch on the variant"""
    if _variant(variant) is PropagatorVariant.CORRECTED:
        return build_corrected(n)
    return build_bv(n)


@lru_cache(maxsize=32)
def _cached(N: int, variant: PropagatorVariant) -> np.ndarray:
    F = build(variant, N)
    F.setflags(write=False)
    return F


def cached_propagator(variant: VariantLike, n: PlanckLike) -> np.ndarray:
    """
    Read-only shared propagator for repeated use in scans and checks

    Args:
        variant: PropagatorVariant or its CLI name
        n: Dimension N or a PlanckParams

    Returns:
        The cached matrix; writing to it raises ValueError
    """
    return _cached(as_planck(n).n, _variant(variant))


def unitarity_residual(M: np.ndarray) -> float:
    """max |M^H M - I|"""
    M = np.asarray(M)
    return float(np.max(np.abs(M.conj().T @ M - np.eye(M.shape[0]))))


def closed_form_entry(n: PlanckLike, row: int, col: int) -> complex:
    """
    Odd-row entry of the corrected propagator in closed form:

        exp(i pi (n - 2m) / N) * sqrt(2)/N * (1 + i cot(pi (n - 2m) / N))

    Args:
        n: Dimension N or a PlanckParams
        row: Odd row index in 0..N-1
        col: Column index in 0..N-1

    Returns:
        The entry, equal to build_corrected(N)[row, col] to rounding

    Raises:
        ValueError: For an even row, indices out of range or a cot pole
    """
    N = as_planck(n).n
    if row % 2 == 0:
        raise ValueError(f"Closed form applies to odd rows only, got n={row}")
    if not (0 <= row < N and 0 <= col < N):
        raise ValueError(f"Indices must lie in 0..{N - 1}, got ({row}, {col})")

    zeta = row - 2 * col
    angle = np.pi * zeta / N
    sine = np.sin(angle)
    if abs(sine) < 1e-15:
        raise ValueError(f"cot pole at n={row}, m={col}")

    phase = complex(unit_phase(zeta, 2 * N))
    return phase * (np.sqrt(2.0) / N) * (1.0 + 1j * np.cos(angle) / sine)


def propagator_entry(n: PlanckLike, row: int, col: int,
                     variant: VariantLike = PropagatorVariant.CORRECTED,
                     periodic_phase: bool = True) -> complex:
    """
    Entry at arbitrary integer indices.

    With ``periodic_phase`` the half-step phase is exp(i pi (n/N - [n/N])),
    which makes the matrix periodic in both indices. Without it the naive
    exp(i pi n / N) flips sign under n -> n + N.
    """
    N = as_planck(n).n
    kind = _variant(variant)
    core = _core(N, kind)[row % N, col % N]
    if kind is PropagatorVariant.BALAZS_VOROS:
        return complex(core)

    row_turns = row % N if periodic_phase else row
    return complex(unit_phase(row_turns, 2 * N) * core * unit_phase(-(col % N), N))


def _zeta_grid(N: int) -> np.ndarray:
    rows = np.arange(N)[:, None]
    cols = np.arange(N)[None, :]
    return np.where(cols < N // 2, rows - 2 * cols, rows - 2 * (cols - N // 2))


def compare_variants(n: PlanckLike) -> VariantComparison:
    """
    Even rows agree; odd entries differ by exp(i pi zeta / N)

    Args:
        n: Dimension N or a PlanckParams

    Returns:
        VariantComparison with the even-row residual and one OddEntry per
        odd-row element
    """
    N = as_planck(n).n
    corrected = build_corrected(N)
    bv = build_bv(N)

    # Even rows must coincide exactly
    even_residual = float(np.max(np.abs(corrected[0::2] - bv[0::2])))

    # Odd rows: strip the relative phase and measure what is left
    zeta = _zeta_grid(N)
    residuals = np.abs(corrected - unit_phase(zeta, 2 * N) * bv)

    odd_entries = [
        OddEntry(n=int(row), m=int(col), zeta=int(zeta[row, col]),
                 phase_residual=float(residuals[row, col]))
        for row in range(1, N, 2)
        for col in range(N)
    ]
    logger.debug("Compared variants", extra={"n": N, "n_even_residual": even_residual})
    return VariantComparison(n=N, n_even_residual=even_residual, odd_entries=odd_entries)


def phase_decay_profile(n: PlanckLike) -> float:
    """
    Largest relative phase |zeta|/N among the odd entries that carry weight.

    Entries count when their modulus exceeds 1/sqrt(2N); zeta is taken in
    [-N/2, N/2) so entries next to the cut at x = 1/2 are measured from the
    wrapped trajectory.

    Args:
        n: Dimension N or a PlanckParams

    Returns:
        max |zeta|/N over heavy odd entries, 0.0 if there are none
    """
    N = as_planck(n).n
    bv = build_bv(N)
    zeta = _zeta_grid(N)
    wrapped = np.mod(zeta + N // 2, N) - N // 2

    # Heavy odd-row entries only
    odd_rows = np.arange(N) % 2 == 1
    heavy = (np.abs(bv) > 1.0 / np.sqrt(2.0 * N)) & odd_rows[:, None]
    if not np.any(heavy):
        return 0.0
    return float(np.max(np.abs(wrapped[heavy])) / N)
