"""
Resilience service for numerical computations that may fail to converge.

Adaptive integrators report failure when their subdivision budget is exhausted
before the requested tolerance is met. The refinement service retries such
calls with a geometrically growing budget instead of a growing delay.
"""

from typing import Callable, Any, Optional, TypeVar

from infrastructure.config.settings import get_config
from infrastructure.monitoring.logging_service import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class ConvergenceError(RuntimeError):
    """A numerical routine stopped before reaching its tolerance"""

    def __init__(self, message: str, estimate: Optional[float] = None, error: Optional[float] = None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


# Errors that a larger budget may cure
RETRIABLE_ERRORS = (
    ConvergenceError,
)

# Bad input never converges with more effort
NON_RETRIABLE_ERRORS = (
    ValueError,
    TypeError,
)


def refinement_schedule(attempt: int, base_limit: int = 100, growth: int = 4,
                        max_limit: int = 100_000) -> int:
    """
    Subdivision budget for a given attempt

    Args:
        attempt: Current attempt number (0-indexed)
        base_limit: Budget of the first attempt
        growth: Multiplicative growth per attempt
        max_limit: Hard cap on the budget

    Returns:
        Subdivision limit for this attempt
    """
    return min(base_limit * (growth ** attempt), max_limit)


class RefinementStatus:
    """Tracks refinement sequences for the stderr status line"""

    def __init__(self):
        self.is_refining = False
        self.current_attempt = 0
        self.max_attempts = 0
        self.last_error: Optional[Exception] = None
        self.current_limit = 0
        self.total_refinements = 0

    def start(self, max_attempts: int):
        """Start a new refinement sequence"""
        self.is_refining = True
        self.current_attempt = 0
        self.max_attempts = max_attempts
        self.last_error = None
        self.current_limit = 0

    def on_attempt(self, attempt: int, error: Exception, next_limit: int):
        """Update status after a failed attempt that will be retried"""
        self.current_attempt = attempt
        self.last_error = error
        self.current_limit = next_limit
        self.total_refinements += 1

    def give_up(self, attempt: int, error: Exception, limit: int):
        """Record the final failed attempt and close the sequence"""
        self.current_attempt = attempt
        self.current_limit = limit
        self.last_error = error
        self.finish(success=False)

    def finish(self, success: bool = True):
        """Finish the refinement sequence"""
        self.is_refining = False
        if success:
            self.last_error = None

    def get_status_message(self) -> str:
        """
        One-line status for stderr diagnostics

        Returns:
            The in-flight attempt while refining, the exhausted budget after a
            failure, the number of refinements after a recovery, else ""
        """
        error_name = self.last_error.__class__.__name__ if self.last_error else "Error"
        if self.is_refining:
            return (f"Refining ({error_name}) - attempt {self.current_attempt}/{self.max_attempts} "
                    f"with limit {self.current_limit}")
        if self.last_error is not None:
            return (f"Refinement exhausted ({error_name}) - attempt {self.current_attempt}/"
                    f"{self.max_attempts} with limit {self.current_limit}")
        if self.total_refinements:
            return f"Quadrature converged after {self.total_refinements} refinement(s)"
        return ""


class RefinementService:
    """
    Service for retrying numerical routines with growing budgets.

    ``status`` accumulates over calls until ``reset_status`` is called.
    """

    def __init__(self):
        self.logger = get_logger(__name__)
        self.status = RefinementStatus()

    def reset_status(self) -> RefinementStatus:
        """Start a fresh status record, e.g. once per CLI invocation"""
        self.status = RefinementStatus()
        return self.status

    def retry_with_refinement(
        self,
        func: Callable[[int], T],
        max_refinements: Optional[int] = None,
        base_limit: Optional[int] = None,
        growth: Optional[int] = None,
        on_retry: Optional[Callable[[int, Exception, int], None]] = None
    ) -> T:
        """
        Execute func(limit) and retry with a larger limit on convergence failure

        Args:
            func: Callable receiving the subdivision limit
            max_refinements: Maximum number of retries after the first attempt
            base_limit: Budget of the first attempt
            growth: Multiplicative growth per attempt
            on_retry: Optional callback (attempt_number, exception, next_limit)

        Returns:
            Function result if successful

        Raises:
            The last ConvergenceError if all refinements are exhausted
        """
        settings = get_config().quadrature
        max_refinements = settings.max_refinements if max_refinements is None else max_refinements
        base_limit = settings.base_limit if base_limit is None else base_limit
        growth = settings.growth if growth is None else growth
        status = self.status
        status.start(max_refinements + 1)

        for attempt in range(max_refinements + 1):
            limit = refinement_schedule(attempt, base_limit, growth)
            try:
                result = func(limit)

                if attempt > 0:
                    self.logger.info(f"Converged after {attempt} refinements", extra={"limit": limit})

                status.finish(success=True)
                return result

            except RETRIABLE_ERRORS as e:
                if attempt == max_refinements:
                    status.give_up(attempt + 1, e, limit)
                    self.logger.error(f"No convergence after {max_refinements} refinements: {str(e)}")
                    raise

                next_limit = refinement_schedule(attempt + 1, base_limit, growth)
                status.on_attempt(attempt + 1, e, next_limit)
                self.logger.warning(
                    f"Attempt {attempt + 1} did not converge, retrying",
                    extra={"status": status.get_status_message()}
                )

                if on_retry:
                    on_retry(attempt + 1, e, next_limit)

            except NON_RETRIABLE_ERRORS as e:
                status.finish(success=True)
                self.logger.warning(f"Non-retriable error encountered: {e.__class__.__name__}: {str(e)}")
                raise

        raise AssertionError("unreachable")


# Global refinement service instance
_refinement_service: Optional[RefinementService] = None


def get_refinement_service() -> RefinementService:
    """Get the global refinement service instance"""
    global _refinement_service
    if _refinement_service is None:
        _refinement_service = RefinementService()
    return _refinement_service


def retry_with_refinement(func: Callable[[int], T], **kwargs: Any) -> T:
    """Module-level shortcut for RefinementService.retry_with_refinement"""
    return get_refinement_service().retry_with_refinement(func, **kwargs)
