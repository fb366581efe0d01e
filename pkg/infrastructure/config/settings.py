"""
Unified configuration system for the baker's map toolkit.

This module provides a centralized configuration system that consolidates numerical
tolerances, quadrature and lattice settings, and logging, supports environment-based
overrides, and provides type-safe configuration access.

Environment variables only influence logging. Numerical results depend on the
command-line flags alone.
"""

from dataclasses import dataclass, field
from typing import Dict, Any, Optional, List
import logging
import os


@dataclass
class CheckThresholds:
    """Pass/fail thresholds for the named verification checks"""
    unitarity: float = 1e-11
    parity: float = 1e-12
    time_reversal: float = 1e-12
    bv_phase: float = 1e-10
    pipeline_oracle: float = 1e-10
    weyl: float = 1e-13
    center: float = 1e-13

    # Spectrum gate and eigenphase snapping
    spectrum_unitarity: float = 1e-8
    phase_snap: float = 1e-10

    def for_check(self, check_name: str) -> float:
        """Threshold for a CLI check name such as 'time-reversal'"""
        attribute = check_name.replace("-", "_")
        if attribute not in self.to_dict():
            raise KeyError(f"Unknown check '{check_name}'")
        return getattr(self, attribute)

    def to_dict(self) -> Dict[str, float]:
        """Named check thresholds keyed by attribute name"""
        return {
            "unitarity": self.unitarity,
            "parity": self.parity,
            "time_reversal": self.time_reversal,
            "bv_phase": self.bv_phase,
            "pipeline_oracle": self.pipeline_oracle,
            "weyl": self.weyl,
            "center": self.center,
        }


@dataclass
class QuadratureConfig:
    """Adaptive quadrature settings for coherent-state integrals"""
    epsabs: float = 1e-11
    epsrel: float = 1e-11
    base_limit: int = 100
    growth: int = 4
    max_refinements: int = 3
    # Integration half-width in units of sqrt(hbar)
    window_sigmas: float = 12.0


@dataclass
class LatticeConfig:
    """Truncation of periodic lattice sums over Gaussian packets"""
    tail_mass: float = 1e-16


@dataclass
class LoggingConfig:
    """Logging configuration"""
    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    enable_file_logging: bool = False
    log_file: str = "logs/baker.log"


@dataclass
class AppConfig:
    """Main application configuration"""
    thresholds: CheckThresholds = field(default_factory=CheckThresholds)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    lattice: LatticeConfig = field(default_factory=LatticeConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Environment settings
    environment: str = field(default_factory=lambda: os.getenv("APP_ENV", "production"))
    debug: bool = field(default_factory=lambda: os.getenv("DEBUG", "false").lower() == "true")

    @classmethod
    def load(cls) -> 'AppConfig':
        """Load configuration with environment overrides"""
        config = cls()

        if config.environment == "production":
            config.logging.level = "WARNING"
        elif config.environment == "development":
            config.debug = True
            config.logging.level = "DEBUG"

        return config

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors"""
        errors = []

        for name, value in self.thresholds.to_dict().items():
            if not value > 0:
                errors.append(f"Threshold '{name}' must be positive")
        if not self.thresholds.spectrum_unitarity > 0:
            errors.append("Spectrum unitarity gate must be positive")

        if self.quadrature.epsabs <= 0:
            errors.append("Quadrature epsabs must be positive")
        if self.quadrature.base_limit < 1:
            errors.append("Quadrature base_limit must be at least 1")
        if self.quadrature.growth < 2:
            errors.append("Quadrature growth must be at least 2")
        if self.quadrature.window_sigmas < 8:
            errors.append("Quadrature window must cover at least 8 packet widths")

        if not 0 < self.lattice.tail_mass < 1:
            errors.append("Lattice tail mass must lie in (0, 1)")

        if not isinstance(logging.getLevelName(self.logging.level.upper()), int):
            errors.append(f"Unknown log level '{self.logging.level}'")

        return errors

    def describe(self) -> Dict[str, Any]:
        """Flat view used in diagnostics"""
        return {
            "environment": self.environment,
            "debug": self.debug,
            "log_level": self.logging.level,
            "thresholds": self.thresholds.to_dict(),
        }


# Global configuration instance
_config: Optional[AppConfig] = None


def get_config() -> AppConfig:
    """Get the global configuration instance with environment-specific overrides"""
    global _config
    if _config is None:
        from infrastructure.config.environments import get_environment_config
        _config = get_environment_config()

        errors = _config.validate()
        if errors:
            import warnings
            for error in errors:
                warnings.warn(f"Configuration error: {error}")

    return _config


def reload_config() -> AppConfig:
    """Reload configuration (useful for testing)"""
    global _config
    _config = None
    return get_config()


def get_thresholds() -> CheckThresholds:
    """Shortcut for the verification thresholds"""
    return get_config().thresholds
