"""
Production environment configuration overrides
"""

from dataclasses import dataclass
from infrastructure.config.settings import AppConfig


@dataclass
class ProductionConfig(AppConfig):
    """Production environment configuration"""

    def __post_init__(self):
        self.environment = "production"
        self.debug = False

        # Warnings and errors only, as JSON on stderr
        self.logging.level = "WARNING"
        self.logging.enable_file_logging = False


def get_production_config() -> ProductionConfig:
    """Get production-specific configuration"""
    return ProductionConfig()
