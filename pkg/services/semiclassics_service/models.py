"""
Semiclassics data models for coherent-state expectations and limit scans.
"""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from infrastructure.resilience.retry_service import ConvergenceError


class CombProjectionError(ValueError):
    """Coherent state cannot be projected onto the comb basis"""


class ScanParameterError(ValueError):
    """Invalid weak-limit scan parameters"""


class InsufficientTermsError(ValueError):
    """Odd-k overlap sum truncated before the overlap support ends"""


class QuadratureConvergenceError(ConvergenceError):
    """Adaptive quadrature did not reach its tolerance"""


class CoherentStateParams(BaseModel):
    """Gaussian packet of width sqrt(hbar) centred at (x0, p0)"""
    model_config = ConfigDict(frozen=True)

    x0: float
    p0: float
    hbar: float = Field(gt=0)

    @field_validator("x0", "p0", "hbar")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("Coherent-state parameters must be finite")
        return value

    @classmethod
    def for_dimension(cls, x0: float, p0: float, n: int) -> "CoherentStateParams":
        """Packet matched to the lattice scale, hbar = 1/(2 pi N)"""
        return cls(x0=x0, p0=p0, hbar=1.0 / (2.0 * math.pi * n))

    @property
    def sigma(self) -> float:
        """Standard deviation of |phi|^2 in either coordinate"""
        return math.sqrt(self.hbar / 2.0)


class LimitScanRow(BaseModel):
    """One row of a weak-limit scan"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    quantum_value: complex
    classical_value: complex
    abs_error: float

    @field_validator("quantum_value", "classical_value", mode="before")
    @classmethod
    def _as_complex(cls, value):
        return complex(value)

    @model_validator(mode="before")
    @classmethod
    def _fill_error(cls, data):
        if isinstance(data, dict) and data.get("abs_error") is None \
                and "quantum_value" in data and "classical_value" in data:
            data = dict(data)
            data["abs_error"] = abs(complex(data["quantum_value"]) - complex(data["classical_value"]))
        return data

    @model_validator(mode="after")
    def _check_error(self) -> "LimitScanRow":
        expected = abs(self.quantum_value - self.classical_value)
        if abs(self.abs_error - expected) > 1e-12:
            raise ValueError(
                f"abs_error {self.abs_error!r} does not match |quantum - classical| = {expected!r}"
            )
        return self
