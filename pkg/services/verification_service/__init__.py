"""
Verification service - named identity checks with threshold reports.
"""

from .models import CheckReport
from .checks import CHECKS, CheckSpec, parse_checks, parse_variants, run_check, run_checks

__all__ = [
    'CHECKS',
    'CheckReport',
    'CheckSpec',
    'parse_checks',
    'parse_variants',
    'run_check',
    'run_checks',
]
