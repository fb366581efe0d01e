"""
Tests for configuration system
"""

import pytest

from infrastructure.config.settings import (
    AppConfig,
    CheckThresholds,
    LatticeConfig,
    LoggingConfig,
    QuadratureConfig,
    get_config,
    get_thresholds,
    reload_config,
)


class TestCheckThresholds:
    """Test verification thresholds"""

    def test_default_values(self):
        """Test the built-in thresholds printed in reports"""
        thresholds = CheckThresholds()

        assert thresholds.unitarity == 1e-11
        assert thresholds.parity == 1e-12
        assert thresholds.time_reversal == 1e-12
        assert thresholds.bv_phase == 1e-10
        assert thresholds.pipeline_oracle == 1e-10
        assert thresholds.weyl == 1e-13
        assert thresholds.center == 1e-13
        assert thresholds.spectrum_unitarity == 1e-8

    def test_for_check_accepts_cli_names(self):
        """Test lookup by hyphenated check names"""
        thresholds = CheckThresholds()

        assert thresholds.for_check("time-reversal") == 1e-12
        assert thresholds.for_check("pipeline-oracle") == 1e-10
        assert thresholds.for_check("bv-phase") == 1e-10

    def test_for_check_unknown(self):
        """Test that unknown names are rejected"""
        with pytest.raises(KeyError):
            CheckThresholds().for_check("spectrum-unitarity")

    def test_to_dict(self):
        """Test conversion to dictionary"""
        names = set(CheckThresholds().to_dict())
        assert names == {
            "unitarity", "parity", "time_reversal", "bv_phase",
            "pipeline_oracle", "weyl", "center",
        }


class TestQuadratureConfig:
    """Test quadrature configuration"""

    def test_default_values(self):
        """Test default configuration values"""
        config = QuadratureConfig()

        assert config.epsabs == 1e-11
        assert config.base_limit == 100
        assert config.growth == 4
        assert config.max_refinements == 3
        assert config.window_sigmas == 12.0


class TestLatticeConfig:
    """Test lattice truncation"""

    def test_default_values(self):
        """Test default tail mass"""
        assert LatticeConfig().tail_mass == 1e-16


class TestLoggingConfig:
    """Test logging configuration"""

    def test_default_values(self):
        """Test default configuration values"""
        config = LoggingConfig()

        assert config.level == "WARNING"
        assert config.enable_file_logging is False
        assert config.log_file == "logs/baker.log"


class TestAppConfig:
    """Test main application configuration"""

    def test_load_production(self, monkeypatch):
        """Test production overrides"""
        monkeypatch.setenv("APP_ENV", "production")
        monkeypatch.delenv("DEBUG", raising=False)

        config = AppConfig.load()

        assert config.environment == "production"
        assert config.logging.level == "WARNING"
        assert config.debug is False

    def test_load_development(self, monkeypatch):
        """Test development overrides"""
        monkeypatch.setenv("APP_ENV", "development")

        config = AppConfig.load()

        assert config.environment == "development"
        assert config.debug is True
        assert config.logging.level == "DEBUG"

    def test_debug_flag_from_env(self, monkeypatch):
        """Test DEBUG environment variable"""
        monkeypatch.setenv("DEBUG", "true")
        assert AppConfig().debug is True

    def test_validation_success(self):
        """Test validation with valid configuration"""
        assert AppConfig().validate() == []

    def test_validation_errors(self):
        """Test validation with invalid configuration"""
        config = AppConfig()
        config.thresholds.parity = 0.0
        config.quadrature.growth = 1
        config.quadrature.window_sigmas = 4.0
        config.lattice.tail_mass = 2.0
        config.logging.level = "LOUD"

        errors = config.validate()

        assert "Threshold 'parity' must be positive" in errors
        assert "Quadrature growth must be at least 2" in errors
        assert "Quadrature window must cover at least 8 packet widths" in errors
        assert "Lattice tail mass must lie in (0, 1)" in errors
        assert "Unknown log level 'LOUD'" in errors

    def test_describe(self):
        """Test diagnostic view"""
        view = AppConfig().describe()

        assert set(view) == {"environment", "debug", "log_level", "thresholds"}
        assert view["thresholds"]["unitarity"] == 1e-11


class TestGlobalConfig:
    """Test global configuration functions"""

    def test_get_config_singleton(self):
        """Test that get_config returns the same instance"""
        assert get_config() is get_config()

    def test_reload_config(self):
        """Test configuration reloading"""
        config1 = get_config()
        config2 = reload_config()

        assert config1 is not config2
        assert get_config() is config2

    def test_get_thresholds(self):
        """Test threshold shortcut"""
        assert get_thresholds() is get_config().thresholds
