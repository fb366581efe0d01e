"""
CLI service - argument parsing, subcommand dispatch and deterministic output.

Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 failed check.
"""

import sys
from typing import List, Optional, TextIO

from infrastructure.monitoring.logging_service import get_error_tracker, initialize_logging
from infrastructure.resilience.retry_service import ConvergenceError, get_refinement_service
from .commands import (
    COMMANDS,
    EXIT_CHECK_FAILED,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    is_finite_args,
)
from .parser import build_parser
from .writers import (
    format_real,
    read_matrix_csv,
    read_matrix_json,
    write_matrix_csv,
    write_matrix_json,
)


def run_cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
            stderr: Optional[TextIO] = None) -> int:
    """
    Parse ``argv`` and run the selected subcommand

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        stdout: Data stream
        stderr: Stream for error and quadrature refinement lines

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    initialize_logging(args.log_level)
    tracker = get_error_tracker()
    refinement_status = get_refinement_service().reset_status()

    try:
        if not is_finite_args(args):
            raise ValueError("Numeric arguments must be finite")
        exit_code = COMMANDS[args.command](args, stdout)
    except ValueError as exc:
        tracker.track_error(exc, context=args.command)
        stderr.write(f"baker-quant {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        tracker.track_error(exc, context=args.command)
        stderr.write(f"baker-quant {args.command}: I/O error: {exc}\n")
        return EXIT_IO
    except ConvergenceError as exc:
        tracker.track_error(exc, context=args.command)
        stderr.write(f"baker-quant {args.command}: numerical failure: {exc}\n")
        exit_code = EXIT_IO

    # Surface quadrature refinements, whether they recovered or not
    status_line = refinement_status.get_status_message()
    if status_line:
        stderr.write(f"baker-quant {args.command}: {status_line}\n")
    return exit_code


__all__ = [
    'EXIT_CHECK_FAILED',
    'EXIT_IO',
    'EXIT_OK',
    'EXIT_USAGE',
    'build_parser',
    'format_real',
    'read_matrix_csv',
    'read_matrix_json',
    'run_cli',
    'write_matrix_csv',
    'write_matrix_json',
]
