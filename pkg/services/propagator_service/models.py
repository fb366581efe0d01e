"""
Domain models for quantum baker propagators.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np


class PropagatorVariant(str, Enum):
    """Quantization variants of the baker's map at theta = (0, 0)"""
    CORRECTED = "corrected"
    BALAZS_VOROS = "balazs_voros"

    @classmethod
    def parse(cls, token: str) -> "PropagatorVariant":
        """Accept the CLI spellings 'corrected', 'bv' and 'balazs_voros'"""
        normalized = token.strip().lower().replace("-", "_")
        if normalized == "bv":
            return cls.BALAZS_VOROS
        try:
            return cls(normalized)
        except ValueError:
            raise ValueError(f"Unknown propagator variant '{token}' (expected corrected or bv)") from None

    @property
    def cli_name(self) -> str:
        return "bv" if self is PropagatorVariant.BALAZS_VOROS else self.value


class NonUnitaryError(ValueError):
    """Matrix failed the unitarity gate"""

    def __init__(self, residual: float, threshold: float):
        super().__init__(
            f"Matrix is not unitary: max|M^H M - I| = {residual:.3e} exceeds {threshold:.1e}"
        )
        self.residual = residual
        self.threshold = threshold


@dataclass(frozen=True)
class OddEntry:
    """Relation of one odd-row entry between the two variants"""
    n: int
    m: int
    zeta: int
    phase_residual: float


@dataclass
class VariantComparison:
    """Entrywise comparison of the corrected and Balazs-Voros matrices"""
    n: int
    n_even_residual: float
    odd_entries: List[OddEntry] = field(default_factory=list)

    @property
    def max_phase_residual(self) -> float:
        return max((entry.phase_residual for entry in self.odd_entries), default=0.0)

    @property
    def residual(self) -> float:
        return max(self.n_even_residual, self.max_phase_residual)


@dataclass
class PipelineState:
    """Coefficients on the doubled comb basis: theta2 = 0 and theta2 = 1/2 sectors"""
    periodic: np.ndarray
    half_periodic: np.ndarray

    def __post_init__(self):
        self.periodic = np.asarray(self.periodic, dtype=complex)
        self.half_periodic = np.asarray(self.half_periodic, dtype=complex)
        if self.periodic.shape != self.half_periodic.shape or self.periodic.ndim != 1:
            raise ValueError("Sector coefficient vectors must be 1-D and of equal length")
        if not (np.all(np.isfinite(self.periodic)) and np.all(np.isfinite(self.half_periodic))):
            raise ValueError("Pipeline coefficients must be finite")

    @classmethod
    def zeros(cls, n: int) -> "PipelineState":
        return cls(np.zeros(n, dtype=complex), np.zeros(n, dtype=complex))

    @property
    def n(self) -> int:
        return self.periodic.shape[0]

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.periodic, self.periodic).real
                             + np.vdot(self.half_periodic, self.half_periodic).real))

    def sector_residual(self) -> float:
        """Largest coefficient left in the theta2 = 1/2 sector"""
        return float(np.max(np.abs(self.half_periodic))) if self.n else 0.0


@dataclass
class SectorSpectra:
    """Eigenphases of a parity-symmetric propagator split by parity"""
    even: np.ndarray
    odd: np.ndarray
    parity_residual: Optional[float] = None
