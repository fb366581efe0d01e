"""
Domain models for classical baker dynamics.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class ClassicalMapError(ValueError):
    """Invalid phase-space point"""


class BoundaryPointError(ClassicalMapError):
    """Point lies on a region boundary where a characteristic function is ambiguous"""


class RegionLabel(str, Enum):
    """Coset regions of the plane used by the covering map and its pullback"""
    L = "l"
    R = "r"
    B = "b"
    T = "t"
    E_X = "e_x"
    O_X = "o_x"
    E_P = "e_p"
    O_P = "o_p"

    @property
    def axis(self) -> str:
        """Coordinate the region constrains ('x' or 'p')"""
        return "x" if self in (RegionLabel.L, RegionLabel.R, RegionLabel.E_X, RegionLabel.O_X) else "p"

    @property
    def period(self) -> int:
        """Period of the coset: 1 for l/r/b/t, 2 for the parity regions"""
        return 2 if self in (RegionLabel.E_X, RegionLabel.O_X, RegionLabel.E_P, RegionLabel.O_P) else 1

    @property
    def interval(self) -> Tuple[float, float]:
        """Half-open base interval [lo, hi) repeated with the region's period"""
        return _BASE_INTERVALS[self]

    @property
    def complement(self) -> "RegionLabel":
        """The other member of the partition"""
        return _COMPLEMENTS[self]

    @property
    def projector_name(self) -> str:
        """Operator name of the matching projector (L, R, B, T, E_x, O_x, E_p, O_p)"""
        return self.value[0].upper() + self.value[1:]


_BASE_INTERVALS = {
    RegionLabel.L: (0.0, 0.5),
    RegionLabel.R: (0.5, 1.0),
    RegionLabel.B: (0.0, 0.5),
    RegionLabel.T: (0.5, 1.0),
    RegionLabel.E_X: (0.0, 1.0),
    RegionLabel.O_X: (1.0, 2.0),
    RegionLabel.E_P: (0.0, 1.0),
    RegionLabel.O_P: (1.0, 2.0),
}

_COMPLEMENTS = {
    RegionLabel.L: RegionLabel.R,
    RegionLabel.R: RegionLabel.L,
    RegionLabel.B: RegionLabel.T,
    RegionLabel.T: RegionLabel.B,
    RegionLabel.E_X: RegionLabel.O_X,
    RegionLabel.O_X: RegionLabel.E_X,
    RegionLabel.E_P: RegionLabel.O_P,
    RegionLabel.O_P: RegionLabel.E_P,
}


@dataclass(frozen=True)
class PlanePoint:
    """Point of the covering plane R²"""
    x: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.p)):
            raise ClassicalMapError(f"Coordinates must be finite, got ({self.x}, {self.p})")

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.p)


@dataclass(frozen=True)
class TorusPoint:
    """Point of the unit torus, both coordinates in [0, 1)"""
    x: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.p)):
            raise ClassicalMapError(f"Coordinates must be finite, got ({self.x}, {self.p})")
        if not (0.0 <= self.x < 1.0 and 0.0 <= self.p < 1.0):
            raise ClassicalMapError(f"Torus coordinates must lie in [0, 1), got ({self.x}, {self.p})")

    @classmethod
    def from_plane(cls, pt: PlanePoint) -> "TorusPoint":
        """Reduce a plane point mod 1"""
        return cls(unit_mod(pt.x), unit_mod(pt.p))

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.p)


def unit_mod(value: float) -> float:
    """Floor-based reduction into [0, 1)"""
    reduced = value - math.floor(value)
    # x - floor(x) rounds up to 1.0 for tiny negative x
    return 0.0 if reduced >= 1.0 else reduced


def double_mod(value: float) -> float:
    """Floor-based reduction into [0, 2)"""
    reduced = value - 2.0 * math.floor(value / 2.0)
    return 0.0 if reduced >= 2.0 else reduced
