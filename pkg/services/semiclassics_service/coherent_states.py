"""
Coherent-state wavefunctions and expectation values of torus harmonics.

    phi(x) = (pi hbar)^-1/4 exp(-(x - x0)^2 / 2 hbar) exp(i p0 x / hbar - i p0 x0 / 2 hbar)

The continuum Weyl pair acts as (U^a V^b phi)(x) = exp(2 pi i a x) phi(x + 2 pi b hbar).
"""

import math
import warnings
from typing import Callable, Union

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from infrastructure.config.settings import get_config
from infrastructure.monitoring.logging_service import get_logger
from infrastructure.resilience.retry_service import retry_with_refinement
from services.semiclassics_service.models import (
    CoherentStateParams,
    QuadratureConvergenceError,
)

logger = get_logger(__name__)

ArrayLike = Union[float, np.ndarray]


def coherent_wavefunction(params: CoherentStateParams, x: ArrayLike) -> ArrayLike:
    """Position-space packet"""
    hbar = params.hbar
    x = np.asarray(x, dtype=float)
    envelope = (math.pi * hbar) ** -0.25 * np.exp(-((x - params.x0) ** 2) / (2.0 * hbar))
    phase = np.exp(1j * params.p0 * (x - 0.5 * params.x0) / hbar)
    value = envelope * phase
    return complex(value) if value.ndim == 0 else value


def coherent_momentum_wavefunction(params: CoherentStateParams, p: ArrayLike) -> ArrayLike:
    """Fourier transform (2 pi hbar)^-1/2 int phi(x) exp(-i p x / hbar) dx, in closed form"""
    hbar = params.hbar
    p = np.asarray(p, dtype=float)
    envelope = (math.pi * hbar) ** -0.25 * np.exp(-((p - params.p0) ** 2) / (2.0 * hbar))
    phase = np.exp(-1j * params.x0 * (p - 0.5 * params.p0) / hbar)
    value = envelope * phase
    return complex(value) if value.ndim == 0 else value


def _integrate(func: Callable[[float], float], lo: float, hi: float, limit: int) -> float:
    settings = get_config().quadrature
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, error = quad(func, lo, hi, epsabs=settings.epsabs,
                                epsrel=settings.epsrel, limit=limit)
        except IntegrationWarning as exc:
            raise QuadratureConvergenceError(
                f"Quadrature on [{lo:.6g}, {hi:.6g}] failed with limit {limit}: {exc}"
            ) from exc
    return value


def _integrate_complex(func: Callable[[float], complex], lo: float, hi: float) -> complex:
    """Real and imaginary parts integrated separately, refined on non-convergence"""

    def attempt(limit: int) -> complex:
        re = _integrate(lambda t: func(t).real, lo, hi, limit)
        im = _integrate(lambda t: func(t).imag, lo, hi, limit)
        return complex(re, im)

    return retry_with_refinement(attempt)


def _window(params: CoherentStateParams, center: float):
    half_width = get_config().quadrature.window_sigmas * math.sqrt(params.hbar)
    return center - half_width, center + half_width


def wavefunction_norm(params: CoherentStateParams) -> float:
    """L2 norm of the packet by quadrature"""
    lo, hi = _window(params, params.x0)

    def attempt(limit: int) -> float:
        return _integrate(lambda x: abs(coherent_wavefunction(params, x)) ** 2, lo, hi, limit)

    return math.sqrt(retry_with_refinement(attempt))


def expect_harmonic_closed_form(params: CoherentStateParams, a: int, b: int) -> complex:
    """
    <phi| U^a V^b |phi> by completing the square:

        exp(2 pi i (a x0 + b p0)) exp(-pi^2 hbar (a^2 + b^2)) exp(-2 pi^2 i a b hbar)
    """
    hbar = params.hbar
    limit = np.exp(2j * math.pi * (a * params.x0 + b * params.p0))
    damping = math.exp(-(math.pi ** 2) * hbar * (a * a + b * b))
    return complex(limit * damping * np.exp(-2j * math.pi ** 2 * a * b * hbar))


def expect_harmonic_continuum(params: CoherentStateParams, a: int, b: int) -> complex:
    """
    <phi| U^a V^b |phi> = int conj(phi(x)) exp(2 pi i a x) phi(x + s) dx, s = 2 pi b hbar

    The integrand is a Gaussian centred at x0 - s/2; the integral runs over a
    window of ``window_sigmas`` packet widths on either side.

    Args:
        params: Coherent-state centre and hbar
        a: Exponent of U, |a| <= 8
        b: Exponent of V, |b| <= 8

    Returns:
        The expectation value as a complex number

    Raises:
        ValueError: If an exponent is out of range
        QuadratureConvergenceError: If refinement runs out of budget
    """
    if abs(a) > 8 or abs(b) > 8:
        raise ValueError(f"Harmonic exponents must satisfy |a|, |b| <= 8, got ({a}, {b})")
    if a == 0 and b == 0:
        return 1.0 + 0.0j

    # Integrate over a window around the midpoint of phi and its shifted copy
    shift = 2.0 * math.pi * b * params.hbar
    lo, hi = _window(params, params.x0 - 0.5 * shift)

    def integrand(x: float) -> complex:
        return (np.conj(coherent_wavefunction(params, x))
                * np.exp(2j * math.pi * a * x)
                * coherent_wavefunction(params, x + shift))

    value = _integrate_complex(integrand, lo, hi)
    logger.debug("Continuum expectation", extra={"a": a, "b": b, "hbar": params.hbar})
    return value
