"""
Independent construction of the corrected propagator from its operator factors.

Each basis comb Phi_m is pushed through three stages on the doubled space of
periodic (theta2 = 0) and half-periodic (theta2 = 1/2) combs:

1. ``stretch``: x -> 2x splits Phi_m into equal parts on Phi_j of both sectors,
   j = 2m mod N.
2. ``momentum_cut``: B + Y^-1 T. Y^-1 is 1 on the periodic sector, so that
   sector passes through; on the half-periodic sector it is B - T, applied in
   momentum-comb coordinates with the DFT.
3. ``position_cut``: E_x + X^-1/2 O_x. X^-1/2 is (-1)^b on comb b, so even
   combs pass through and odd combs swap sectors with a half-step phase.

The periodic output is the propagator column; any half-periodic remainder is
reported as the sector residual and vanishes identically.
"""

from typing import Tuple

import numpy as np

from infrastructure.monitoring.logging_service import get_logger, log_execution_time
from services.kinematics_service import PlanckLike, as_planck, dft, unit_phase
from services.propagator_service.models import PipelineState

logger = get_logger(__name__)


def stretch(n: PlanckLike, m: int) -> PipelineState:
    """Image of Phi_m^{(0,0)} under the squeeze x -> 2x"""
    N = as_planck(n).n
    m = m % N
    state = PipelineState.zeros(N)
    weight = 1.0 / np.sqrt(2.0)

    if m < N // 2:
        # even images 2m/N + 2k
        j = 2 * m
        state.periodic[j] = weight
        state.half_periodic[j] = weight * complex(unit_phase(-m, N))
    else:
        # odd images (2m - N)/N + 2k + 1
        j = 2 * m - N
        state.periodic[j] = weight
        state.half_periodic[j] = -weight * complex(unit_phase(-j, 2 * N))
    return state


def momentum_cut(state: PipelineState) -> PipelineState:
    """B + Y^-1 T: identity on the periodic sector, B - T on the half-periodic one"""
    N = state.n
    A = dft(N)
    signs = np.where(np.arange(N) < N // 2, 1.0, -1.0)

    # To momentum combs, flip the top half, back to position combs
    momentum = A @ state.half_periodic
    return PipelineState(state.periodic.copy(), A.conj().T @ (signs * momentum))


def position_cut(state: PipelineState) -> PipelineState:
    """E_x + X^-1/2 O_x: odd combs trade sectors, picking up exp(+-i pi b / N)"""
    N = state.n
    idx = np.arange(N)
    odd = idx % 2 == 1

    periodic = state.periodic.copy()
    half_periodic = state.half_periodic.copy()
    periodic[odd] = unit_phase(idx[odd], 2 * N) * state.half_periodic[odd]
    half_periodic[odd] = unit_phase(-idx[odd], 2 * N) * state.periodic[odd]
    return PipelineState(periodic, half_periodic)


def propagate_comb(n: PlanckLike, m: int) -> PipelineState:
    """All three stages applied to Phi_m"""
    return position_cut(momentum_cut(stretch(n, m)))


def build_via_pipeline(n: PlanckLike) -> Tuple[np.ndarray, float]:
    """
    Assemble the propagator column by column from the stage formulas.

    Args:
        n: Dimension N (even, >= 2) or a PlanckParams

    Returns:
        (matrix, sector_residual) where sector_residual is the largest
        coefficient left in the half-periodic sector over all columns
    """
    N = as_planck(n).n
    matrix = np.zeros((N, N), dtype=complex)
    residual = 0.0

    with log_execution_time(logger, "pipeline propagator", n=N):
        for m in range(N):
            out = propagate_comb(N, m)
            matrix[:, m] = out.periodic
            residual = max(residual, out.sector_residual())

    return matrix, residual
