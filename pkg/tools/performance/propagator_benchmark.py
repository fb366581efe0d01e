#!/usr/bin/env python3
"""
Performance test for propagator construction
This script times the builders, the pipeline oracle and the spectrum over a range of N
"""

import sys
import time
from typing import Dict, List, Sequence

from infrastructure.monitoring.logging_service import initialize_logging, get_logger
from services.propagator_service import (
    build_bv,
    build_corrected,
    build_via_pipeline,
    spectrum,
    unitarity_residual,
)

logger = get_logger(__name__)

DEFAULT_SIZES = (16, 64, 256, 512)


def _timed(func, *args) -> float:
    start = time.perf_counter()
    func(*args)
    return (time.perf_counter() - start) * 1000


def run_benchmark(n_list: Sequence[int] = DEFAULT_SIZES,
                  include_pipeline: bool = True) -> List[Dict[str, float]]:
    """Milliseconds per stage for each N"""
    results = []
    for n in n_list:
        corrected = build_corrected(n)
        row = {
            "n": n,
            "corrected_ms": _timed(build_corrected, n),
            "bv_ms": _timed(build_bv, n),
            "spectrum_ms": _timed(spectrum, corrected),
            "unitarity_residual": unitarity_residual(corrected),
        }
        if include_pipeline:
            row["pipeline_ms"] = _timed(build_via_pipeline, n)
        logger.info("Benchmarked propagator", extra=row)
        results.append(row)
    return results


def main():
    """Print a timing table to stdout"""
    initialize_logging()

    sizes = [int(arg) for arg in sys.argv[1:]] or list(DEFAULT_SIZES)

    print("=" * 60)
    print("Propagator Performance Analysis")
    print("=" * 60)
    print(f"{'N':>6} {'corrected':>12} {'bv':>10} {'pipeline':>10} {'spectrum':>10}")
    print("-" * 60)

    for row in run_benchmark(sizes):
        print(f"{row['n']:>6} {row['corrected_ms']:>10.1f}ms {row['bv_ms']:>8.1f}ms "
              f"{row['pipeline_ms']:>8.1f}ms {row['spectrum_ms']:>8.1f}ms")

    print("\n" + "=" * 60)
    print("Analysis Complete")
    print("=" * 60)


if __name__ == "__main__":
    main()
