"""
Subcommand handlers. Each returns the process exit code and writes data to
the given stream; diagnostics go through logging.
"""

import argparse
import math
from typing import Callable, Dict, TextIO

from infrastructure.monitoring.logging_service import get_logger
from services.classical_service import (
    PlanePoint,
    TorusPoint,
    cover_baker,
    cover_baker_inverse,
    orbit,
    torus_baker,
)
from services.cli_service.writers import (
    format_real,
    write_matrix_csv,
    write_matrix_json,
    write_rows,
)
from services.propagator_service import (
    PropagatorVariant,
    build,
    parity_sector_spectra,
    spectrum,
)
from services.semiclassics_service import (
    CoherentStateParams,
    expect_harmonic_continuum,
    noncommute_demo,
    noncommute_limit,
    weak_limit_scan,
)
from services.verification_service import parse_checks, parse_variants, run_checks

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


def cmd_propagator(args: argparse.Namespace, stdout: TextIO) -> int:
    variant = PropagatorVariant.parse(args.variant)
    matrix = build(variant, args.n)

    def emit(stream: TextIO) -> None:
        if args.format == "json":
            write_matrix_json(stream, matrix, variant.cli_name)
        else:
            write_matrix_csv(stream, matrix)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            emit(handle)
        logger.info("Wrote propagator", extra={"path": args.out, "n": args.n})
    else:
        emit(stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, stdout: TextIO) -> int:
    if not args.n_list:
        raise ValueError("--n-list is empty")
    checks = parse_checks(args.checks)
    variants = parse_variants(args.variant)
    reports = run_checks(checks, args.n_list, variants, workers=args.workers)

    for report in reports:
        stdout.write(report.to_json_line() + "\n")

    failed = [report for report in reports if not report.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(reports)} checks failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


_CLASSICAL_STEPS: Dict[str, Callable] = {
    "map": torus_baker,
    "cover": cover_baker,
    "inverse": cover_baker_inverse,
}


def cmd_classical(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.iters < 0:
        raise ValueError(f"--iters must be non-negative, got {args.iters}")
    start = TorusPoint(args.x, args.p) if args.map_kind == "map" else PlanePoint(args.x, args.p)
    points = orbit(_CLASSICAL_STEPS[args.map_kind], start, args.iters)
    write_rows(stdout, ("step", "x", "p"),
               ((str(i), repr(pt.x), repr(pt.p)) for i, pt in enumerate(points)))
    return EXIT_OK


def _cmd_expect(args: argparse.Namespace, stdout: TextIO) -> int:
    params = CoherentStateParams(x0=args.x0, p0=args.p0, hbar=args.hbar)
    value = expect_harmonic_continuum(params, args.a, args.b)
    write_rows(stdout, ("x0", "p0", "a", "b", "hbar", "re", "im"), [(
        format_real(args.x0), format_real(args.p0), str(args.a), str(args.b),
        format_real(args.hbar), format_real(value.real), format_real(value.imag),
    )])
    return EXIT_OK


def _cmd_limit_scan(args: argparse.Namespace, stdout: TextIO) -> int:
    rows = weak_limit_scan(args.x0, args.p0, args.a, args.b, args.n_list,
                           variant=PropagatorVariant.parse(args.variant), steps=args.steps)
    write_rows(stdout, ("N", "re_q", "im_q", "re_c", "im_c", "abs_error"), (
        (str(row.n),
         format_real(row.quantum_value.real), format_real(row.quantum_value.imag),
         format_real(row.classical_value.real), format_real(row.classical_value.imag),
         format_real(row.abs_error))
        for row in rows
    ))
    return EXIT_OK


def _cmd_noncommute(args: argparse.Namespace, stdout: TextIO) -> int:
    if not args.hbar_list:
        raise ValueError("--hbar-list is empty")
    limit = noncommute_limit()
    rows = []
    for hbar in sorted(args.hbar_list, reverse=True):
        le_p, _ = noncommute_demo(hbar, args.k_max)
        rows.append((format_real(hbar), format_real(le_p.real), format_real(le_p.imag),
                     format_real(abs(le_p - limit))))
    write_rows(stdout, ("hbar", "re", "im", "abs_dev_from_limit"), rows)
    return EXIT_OK


_SEMICLASSICS_ACTIONS = {
    "expect": _cmd_expect,
    "limit-scan": _cmd_limit_scan,
    "noncommute": _cmd_noncommute,
}


def cmd_semiclassics(args: argparse.Namespace, stdout: TextIO) -> int:
    return _SEMICLASSICS_ACTIONS[args.action](args, stdout)


def cmd_spectrum(args: argparse.Namespace, stdout: TextIO) -> int:
    matrix = build(PropagatorVariant.parse(args.variant), args.n)
    if args.sectors:
        sectors = parity_sector_spectra(matrix)
        rows = [("even", str(i), format_real(phase)) for i, phase in enumerate(sectors.even)]
        rows += [("odd", str(i), format_real(phase)) for i, phase in enumerate(sectors.odd)]
        write_rows(stdout, ("sector", "index", "phase"), rows)
    else:
        phases = spectrum(matrix)
        write_rows(stdout, ("index", "phase"),
                   ((str(i), format_real(phase)) for i, phase in enumerate(phases)))
    return EXIT_OK


COMMANDS = {
    "propagator": cmd_propagator,
    "verify": cmd_verify,
    "classical": cmd_classical,
    "semiclassics": cmd_semiclassics,
    "spectrum": cmd_spectrum,
}


def is_finite_args(args: argparse.Namespace) -> bool:
    """True when every float flag is finite"""
    return all(math.isfinite(value) for value in vars(args).values() if isinstance(value, float))
