"""
Named identity checks over propagators and the Weyl pair.

Each check maps (N, variant) to a residual; the threshold comes from
``CheckThresholds``. Variant-independent checks run once per N.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from infrastructure.config.settings import get_thresholds
from infrastructure.monitoring.logging_service import get_logger, log_check_result
from services.kinematics_service import (
    as_planck,
    parity_matrix,
    time_reversal_image,
    u_matrix,
    unit_phase,
    v_matrix,
)
from services.propagator_service import (
    CLOSED_FORM_PREFACTOR,
    PropagatorVariant,
    build_via_pipeline,
    cached_propagator,
    compare_variants,
    unitarity_residual,
)
from services.verification_service.models import CheckReport

logger = get_logger(__name__)


def _unitarity(N: int, variant: PropagatorVariant) -> float:
    return unitarity_residual(cached_propagator(variant, N))


def _parity(N: int, variant: PropagatorVariant) -> float:
    F = cached_propagator(variant, N)
    P = parity_matrix(N)
    return float(np.max(np.abs(P @ F @ P - F)))


def _time_reversal(N: int, variant: PropagatorVariant) -> float:
    F = cached_propagator(variant, N)
    return float(np.max(np.abs(time_reversal_image(F) - F.conj().T)))


def _bv_phase(N: int, variant: Optional[PropagatorVariant]) -> float:
    return compare_variants(N).residual


def _pipeline_oracle(N: int, variant: Optional[PropagatorVariant]) -> float:
    matrix, sector_residual = build_via_pipeline(N)
    corrected = cached_propagator(PropagatorVariant.CORRECTED, N)
    return max(float(np.max(np.abs(matrix - corrected))), sector_residual)


def _weyl(N: int, variant: Optional[PropagatorVariant]) -> float:
    U, V = u_matrix(N), v_matrix(N)
    omega = complex(unit_phase(1, N))
    return float(np.max(np.abs(U @ V - omega * (V @ U))))


def _center(N: int, variant: Optional[PropagatorVariant]) -> float:
    identity = np.eye(N)
    return max(
        float(np.max(np.abs(np.linalg.matrix_power(u_matrix(N), N) - identity))),
        float(np.max(np.abs(np.linalg.matrix_power(v_matrix(N), N) - identity))),
    )


@dataclass(frozen=True)
class CheckSpec:
    """A named check and how it treats the variant axis"""
    name: str
    compute: Callable[[int, Optional[PropagatorVariant]], float]
    per_variant: bool
    # context label when the check ignores the requested variants
    fixed_variant: str = "n/a"
    # constant fields added to every report of this check
    extra_context: Mapping[str, Any] = field(default_factory=dict)


CHECKS: Dict[str, CheckSpec] = {
    spec.name: spec for spec in (
        CheckSpec("unitarity", _unitarity, per_variant=True),
        CheckSpec("parity", _parity, per_variant=True),
        CheckSpec("time-reversal", _time_reversal, per_variant=True),
        CheckSpec("bv-phase", _bv_phase, per_variant=False, fixed_variant="both",
                  extra_context={"closed_form_prefactor": CLOSED_FORM_PREFACTOR}),
        CheckSpec("pipeline-oracle", _pipeline_oracle, per_variant=False, fixed_variant="corrected"),
        CheckSpec("weyl", _weyl, per_variant=False),
        CheckSpec("center", _center, per_variant=False),
    )
}


def parse_checks(text: str) -> List[str]:
    """Comma-separated check names, validated and de-duplicated in order"""
    names: List[str] = []
    for token in text.split(","):
        name = token.strip()
        if not name:
            continue
        if name not in CHECKS:
            raise ValueError(
                f"Unknown check '{name}' (expected one of: {', '.join(CHECKS)})"
            )
        if name not in names:
            names.append(name)
    if not names:
        raise ValueError("No checks requested")
    return names


def parse_variants(token: str) -> List[PropagatorVariant]:
    """'both', 'corrected' or 'bv'"""
    if token.strip().lower() == "both":
        return [PropagatorVariant.CORRECTED, PropagatorVariant.BALAZS_VOROS]
    return [PropagatorVariant.parse(token)]
def run_check(name: str, n: int, variant: Optional[PropagatorVariant] = None) -> CheckReport:
    """
    Evaluate one check at one dimension

    Args:
        name: Key of ``CHECKS``
        n: Hilbert-space dimension, even and at least 2
        variant: Propagator to test; required for per-variant checks

    Returns:
        CheckReport with the residual, threshold and context
    """
    spec = CHECKS[name]
    N = as_planck(n).n
    if spec.per_variant and variant is None:
        raise ValueError(f"Check '{name}' needs a propagator variant")

    # Compute the residual and label the variant axis
    residual = spec.compute(N, variant if spec.per_variant else None)
    label = variant.cli_name if spec.per_variant and variant is not None else spec.fixed_variant
    threshold = get_thresholds().for_check(name)

    report = CheckReport.evaluate(name, residual, threshold, n=N, variant=label,
                                  **spec.extra_context)
    log_check_result(logger, name, report.passed, residual=report.residual,
                     threshold=threshold, n=N, variant=label)
    return report


def _tasks(checks: Sequence[str], dims: Sequence[int],
           variants: Sequence[PropagatorVariant]):
    for name in checks:
        for N in dims:
            if CHECKS[name].per_variant:
                for variant in variants:
                    yield name, N, variant
            else:
                yield name, N, None


def run_checks(checks: Sequence[str], n_list: Iterable[int],
               variants: Sequence[PropagatorVariant], workers: int = 1) -> List[CheckReport]:
    """
    Evaluate every (check, N, variant) task, optionally on a thread pool.

    Reports are returned sorted by (check name, N, variant) whatever the
    completion order.

    Args:
        checks: Check names, as returned by ``parse_checks``
        n_list: Dimensions; duplicates run once
        variants: Propagators for the per-variant checks
        workers: Thread count, 1 for a serial run

    Returns:
        Sorted list of CheckReport

    Raises:
        ValueError: If no dimension is given, a dimension is invalid or workers < 1
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    # Validate and de-duplicate the dimensions before any work starts
    dims = sorted({as_planck(n).n for n in n_list})
    if not dims:
        raise ValueError("No dimensions requested")
    tasks = list(_tasks(checks, dims, variants))

    if workers == 1:
        reports = [run_check(*task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda task: run_check(*task), tasks))

    return sorted(reports, key=CheckReport.sort_key)
