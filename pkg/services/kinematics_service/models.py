"""
Domain models for the finite-dimensional torus Hilbert space at h = 1/N.
"""

import math
import numbers
from dataclasses import dataclass
from typing import ClassVar, Union


class InvalidPlanckError(ValueError):
    """N is not a positive even integer"""


class DimensionError(ValueError):
    """Matrix dimension does not match the requested operation"""


@dataclass(frozen=True)
class PlanckN:
    """Even Hilbert-space dimension N, with h = 1/N and hbar = 1/(2 pi N)"""
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral):
            raise InvalidPlanckError(f"N must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2 or self.n % 2:
            raise InvalidPlanckError(f"N must be an even integer >= 2, got {self.n}")

    @property
    def h(self) -> float:
        return 1.0 / self.n

    @property
    def hbar(self) -> float:
        return 1.0 / (2.0 * math.pi * self.n)

    @property
    def half(self) -> int:
        return self.n // 2


PlanckLike = Union[int, PlanckN]


def as_planck(n: PlanckLike) -> PlanckN:
    """Coerce an int or PlanckN into a validated PlanckN"""
    return n if isinstance(n, PlanckN) else PlanckN(n)


@dataclass(frozen=True)
class ThetaPoint:
    """Boundary-condition label of a torus sector; only (0, 0) and (0, 1/2) are built"""
    theta1: float
    theta2: float

    PERIODIC: ClassVar["ThetaPoint"]
    HALF_PERIODIC: ClassVar["ThetaPoint"]

    def __post_init__(self):
        if (self.theta1, self.theta2) not in ((0.0, 0.0), (0.0, 0.5)):
            raise ValueError(f"Unsupported sector ({self.theta1}, {self.theta2})")


ThetaPoint.PERIODIC = ThetaPoint(0.0, 0.0)
ThetaPoint.HALF_PERIODIC = ThetaPoint(0.0, 0.5)


@dataclass(frozen=True)
class CombIndex:
    """Position comb label m, reduced mod N"""
    m: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"Dimension must be positive, got {self.n}")
        object.__setattr__(self, "m", self.m % self.n)

    def shifted(self, k: int) -> "CombIndex":
        return CombIndex(self.m + k, self.n)
