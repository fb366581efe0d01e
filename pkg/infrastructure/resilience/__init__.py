"""
Resilience infrastructure - retries numerical routines that fail to converge.
"""

from .retry_service import (
    ConvergenceError,
    RefinementService,
    RefinementStatus,
    get_refinement_service,
    refinement_schedule,
    retry_with_refinement,
)

__all__ = [
    'ConvergenceError',
    'RefinementService',
    'RefinementStatus',
    'get_refinement_service',
    'refinement_schedule',
    'retry_with_refinement',
]
