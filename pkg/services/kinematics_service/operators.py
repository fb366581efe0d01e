"""
Matrices of the torus kinematics at theta = (0, 0).

Basis: position combs Phi_m, m = 0..N-1. Column m of an operator matrix holds
the coefficients of the image of Phi_m.

Conventions
-----------
U Phi_m = exp(2 pi i m / N) Phi_m and V Phi_m = Phi_{m+1}, so that
UV = exp(2 pi i / N) VU. This V moves combs towards larger x, which is the
continuum exp(-2 pi i p). Consequently the continuum harmonic
exp(2 pi i (a x + b p)) is represented by U^a V^-b (``harmonic_observable``),
and the antilinear time reversal acts as U <-> V.
"""

from typing import Union

import numpy as np

from services.kinematics_service.models import (
    DimensionError,
    PlanckLike,
    as_planck,
)

_QUARTER_TURNS = np.array([1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j])


def unit_phase(numerators: Union[int, np.ndarray], denominator: int) -> np.ndarray:
    """
    exp(2 pi i k / d) for integer k, with quarter turns returned exactly.

    Args:
        numerators: integer or integer array k
        denominator: positive integer d

    Returns:
        Complex array with the shape of ``numerators``
    """
    if denominator < 1:
        raise DimensionError(f"Denominator must be positive, got {denominator}")
    shape = np.shape(numerators)
    k = np.mod(np.atleast_1d(np.asarray(numerators, dtype=np.int64)), denominator)
    phase = np.exp(2j * np.pi * k / denominator)
    quarter = (4 * k) % denominator == 0
    if np.any(quarter):
        phase[quarter] = _QUARTER_TURNS[(4 * k[quarter]) // denominator]
    return phase.reshape(shape)


def comb_index(m: int, n: PlanckLike) -> int:
    """Reduce a comb label into 0..N-1 (Phi_{m+N} = Phi_m)"""
    return int(m) % as_planck(n).n


def dft(dim: int) -> np.ndarray:
    """Unitary DFT matrix with entries exp(-2 pi i m n / dim) / sqrt(dim)"""
    if dim < 1:
        raise DimensionError(f"DFT dimension must be at least 1, got {dim}")
    idx = np.arange(dim, dtype=np.int64)
    return unit_phase(-np.outer(idx, idx), dim) / np.sqrt(dim)


def z_matrix(n: PlanckLike) -> np.ndarray:
    """Diagonal half-step phase diag(exp(i pi k / N))"""
    N = as_planck(n).n
    return np.diag(unit_phase(np.arange(N), 2 * N))


def u_matrix(n: PlanckLike) -> np.ndarray:
    """Clock matrix, the action of exp(2 pi i x) on the combs"""
    N = as_planck(n).n
    return np.diag(unit_phase(np.arange(N), N))


def v_matrix(n: PlanckLike) -> np.ndarray:
    """Cyclic shift Phi_m -> Phi_{m+1}"""
    N = as_planck(n).n
    return np.roll(np.eye(N, dtype=complex), 1, axis=0)


def harmonic(n: PlanckLike, a: int, b: int) -> np.ndarray:
    """U^a V^b with exponents reduced mod N"""
    N = as_planck(n).n
    a, b = int(a) % N, int(b) % N
    clock = unit_phase(a * np.arange(N), N)
    shift = np.roll(np.eye(N, dtype=complex), b, axis=0)
    return clock[:, None] * shift


def harmonic_observable(n: PlanckLike, a: int, b: int) -> np.ndarray:
    """Matrix representing the continuum harmonic exp(2 pi i (a x + b p))"""
    return harmonic(n, a, -b)


def parity_matrix(n: PlanckLike) -> np.ndarray:
    """Permutation Phi_m -> Phi_{N-m}"""
    N = as_planck(n).n
    P = np.zeros((N, N))
    idx = np.arange(N)
    P[(-idx) % N, idx] = 1.0
    return P


def time_reversal_image(M: np.ndarray) -> np.ndarray:
    """
    Matrix of Omega M Omega, computed as A^-1 conj(M) A with A = dft(N).

    Omega maps Phi_m to the momentum comb sum_n (A^-1)_{mn} Phi_n and is
    antilinear.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {M.shape}")
    A = dft(M.shape[0])
    return A.conj().T @ np.conj(M) @ A
