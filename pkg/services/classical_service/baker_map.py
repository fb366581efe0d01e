"""
Classical baker dynamics on the torus and on the covering plane.

Scalar operations act on TorusPoint / PlanePoint; the ``*_arrays`` kernels apply
the same branch rules elementwise to numpy arrays and back the large
random-point identity checks.
"""

import cmath
import math
from typing import Callable, FrozenSet, List, Tuple, TypeVar

import numpy as np

from infrastructure.monitoring.logging_service import get_logger
from services.classical_service.models import (
    BoundaryPointError,
    ClassicalMapError,
    PlanePoint,
    RegionLabel,
    TorusPoint,
    double_mod,
    unit_mod,
)

logger = get_logger(__name__)

P = TypeVar("P", TorusPoint, PlanePoint)


def torus_baker(pt: TorusPoint) -> TorusPoint:
    """Stretch x by 2, squeeze p by 2, cut at x = 1/2 and stack the right half on top"""
    if pt.x < 0.5:
        return TorusPoint(2.0 * pt.x, pt.p / 2.0)
    return TorusPoint(2.0 * pt.x - 1.0, unit_mod(pt.p / 2.0 + 0.5))


def cover_baker(pt: PlanePoint) -> PlanePoint:
    """Lift of the baker's map to the plane, branch chosen by (l/r) x (e_p/o_p)"""
    left = unit_mod(pt.x) < 0.5
    even_p = double_mod(pt.p) < 1.0
    if left and even_p:
        return PlanePoint(2.0 * pt.x, pt.p / 2.0)
    if even_p:
        return PlanePoint(2.0 * pt.x - 1.0, pt.p / 2.0 + 0.5)
    if left:
        return PlanePoint(2.0 * pt.x + 1.0, pt.p / 2.0 + 0.5)
    return PlanePoint(2.0 * pt.x, pt.p / 2.0)


def cover_baker_inverse(pt: PlanePoint) -> PlanePoint:
    """Inverse covering map, branch chosen by (e_x/o_x) x (b/t)"""
    even_x = double_mod(pt.x) < 1.0
    bottom = unit_mod(pt.p) < 0.5
    if even_x and bottom:
        return PlanePoint(pt.x / 2.0, 2.0 * pt.p)
    if bottom:
        return PlanePoint(pt.x / 2.0 - 0.5, 2.0 * pt.p - 1.0)
    if even_x:
        return PlanePoint(pt.x / 2.0 + 0.5, 2.0 * pt.p - 1.0)
    return PlanePoint(pt.x / 2.0, 2.0 * pt.p)


def classify(pt: PlanePoint) -> FrozenSet[RegionLabel]:
    """One label from each of the four partitions"""
    return frozenset((
        RegionLabel.L if unit_mod(pt.x) < 0.5 else RegionLabel.R,
        RegionLabel.B if unit_mod(pt.p) < 0.5 else RegionLabel.T,
        RegionLabel.E_X if double_mod(pt.x) < 1.0 else RegionLabel.O_X,
        RegionLabel.E_P if double_mod(pt.p) < 1.0 else RegionLabel.O_P,
    ))


def on_pullback_boundary(pt: PlanePoint) -> bool:
    """True on x in Z/2 or p in Z, where the l/r or e_p/o_p indicator jumps"""
    return unit_mod(2.0 * pt.x) == 0.0 or unit_mod(pt.p) == 0.0


def pullback_harmonic(a: int, b: int, pt: PlanePoint) -> complex:
    """
    Evaluate the pullback of exp(2 pi i (a x + b p)) under the covering map.

    Uses the product form
        exp(4 pi i a x) exp(i pi b p) (chi_l + (-1)^b chi_r)(chi_ep + (-1)^b chi_op)
    rather than composing with cover_baker.
    """
    if on_pullback_boundary(pt):
        raise BoundaryPointError(f"({pt.x}, {pt.p}) lies on a region boundary")

    sign = -1.0 if b % 2 else 1.0
    labels = classify(pt)
    horizontal = 1.0 if RegionLabel.L in labels else sign
    vertical = 1.0 if RegionLabel.E_P in labels else sign
    return cmath.exp(4j * math.pi * a * pt.x) * cmath.exp(1j * math.pi * b * pt.p) * horizontal * vertical


def parity_point(pt: TorusPoint) -> TorusPoint:
    """Antipodal map (x, p) -> (1 - x, 1 - p) mod 1"""
    return TorusPoint(unit_mod(1.0 - pt.x), unit_mod(1.0 - pt.p))


def orbit(step: Callable[[P], P], start: P, iters: int) -> List[P]:
    """Iterate a map, returning the start point followed by iters images"""
    if iters < 0:
        raise ClassicalMapError(f"iters must be non-negative, got {iters}")
    points = [start]
    for _ in range(iters):
        points.append(step(points[-1]))
    logger.debug("Computed orbit", extra={"step": getattr(step, "__name__", str(step)), "iters": iters})
    return points


# Vectorised kernels

def _check_finite(*arrays: np.ndarray) -> None:
    for arr in arrays:
        if not np.all(np.isfinite(arr)):
            raise ClassicalMapError("Coordinates must be finite")


def _unit_mod_array(values: np.ndarray) -> np.ndarray:
    reduced = values - np.floor(values)
    return np.where(reduced >= 1.0, 0.0, reduced)


def _double_mod_array(values: np.ndarray) -> np.ndarray:
    reduced = values - 2.0 * np.floor(values / 2.0)
    return np.where(reduced >= 2.0, 0.0, reduced)


def region_mask(label: RegionLabel, x: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Boolean membership of each (x, p) in a region"""
    coord = np.asarray(x if label.axis == "x" else p, dtype=float)
    reduced = _double_mod_array(coord) if label.period == 2 else _unit_mod_array(coord)
    lo, hi = label.interval
    return (reduced >= lo) & (reduced < hi)


def torus_baker_arrays(x: np.ndarray, p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_finite(x, p)
    left = x < 0.5
    new_x = np.where(left, 2.0 * x, 2.0 * x - 1.0)
    new_p = np.where(left, p / 2.0, _unit_mod_array(p / 2.0 + 0.5))
    return new_x, new_p


def cover_baker_arrays(x: np.ndarray, p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised cover_baker over coordinate arrays of equal shape"""
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_finite(x, p)
    left = _unit_mod_array(x) < 0.5
    even_p = _double_mod_array(p) < 1.0
    # x shift: 0 on l∩e_p and r∩o_p, -1 on r∩e_p, +1 on l∩o_p
    x_shift = np.where(left == even_p, 0.0, np.where(even_p, -1.0, 1.0))
    p_shift = np.where(left == even_p, 0.0, 0.5)
    return 2.0 * x + x_shift, p / 2.0 + p_shift


def cover_baker_inverse_arrays(x: np.ndarray, p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_finite(x, p)
    even_x = _double_mod_array(x) < 1.0
    bottom = _unit_mod_array(p) < 0.5
    # unshifted on e_x∩b and o_x∩t
    x_shift = np.where(even_x == bottom, 0.0, np.where(bottom, -0.5, 0.5))
    p_shift = np.where(even_x == bottom, 0.0, -1.0)
    return x / 2.0 + x_shift, 2.0 * p + p_shift


def pullback_harmonic_array(a: int, b: int, x: np.ndarray, p: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_finite(x, p)
    if np.any(_unit_mod_array(2.0 * x) == 0.0) or np.any(_unit_mod_array(p) == 0.0):
        raise BoundaryPointError("Some points lie on a region boundary")
    sign = -1.0 if b % 2 else 1.0
    horizontal = np.where(region_mask(RegionLabel.L, x, p), 1.0, sign)
    vertical = np.where(region_mask(RegionLabel.E_P, x, p), 1.0, sign)
    return np.exp(4j * np.pi * a * x) * np.exp(1j * np.pi * b * p) * horizontal * vertical
