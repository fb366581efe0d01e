"""
Argument parser for the baker-quant command line.
"""

import argparse
from typing import List

from services.verification_service import CHECKS


def int_list(text: str) -> List[int]:
    """Comma-separated integers such as '2,4,8'"""
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def float_list(text: str) -> List[float]:
    """Comma-separated decimals such as '1e-2,1e-3'"""
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'") from None


def _add_propagator(subparsers) -> None:
    parser = subparsers.add_parser("propagator", help="Write a propagator matrix")
    parser.add_argument("--n", type=int, required=True, help="Even Hilbert-space dimension")
    parser.add_argument("--variant", choices=["corrected", "bv"], default="corrected")
    parser.add_argument("--format", choices=["json", "csv"], default="csv")
    parser.add_argument("--out", default=None, help="Output file (default: stdout)")


def _add_verify(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Run identity checks, one JSON line each")
    parser.add_argument("--n-list", type=int_list, required=True)
    parser.add_argument("--variant", choices=["corrected", "bv", "both"], default="both")
    parser.add_argument("--checks", default=",".join(CHECKS),
                        help=f"Comma-separated subset of: {', '.join(CHECKS)}")
    parser.add_argument("--workers", type=int, default=1)


def _add_classical(subparsers) -> None:
    parser = subparsers.add_parser("classical", help="Classical orbit as CSV")
    parser.add_argument("map_kind", choices=["map", "cover", "inverse"])
    parser.add_argument("--x", type=float, required=True)
    parser.add_argument("--p", type=float, required=True)
    parser.add_argument("--iters", type=int, default=1)


def _add_semiclassics(subparsers) -> None:
    parser = subparsers.add_parser("semiclassics", help="Coherent-state semiclassics")
    actions = parser.add_subparsers(dest="action", required=True)

    expect = actions.add_parser("expect", help="<phi|U^a V^b|phi> by quadrature")
    expect.add_argument("--x0", type=float, required=True)
    expect.add_argument("--p0", type=float, required=True)
    expect.add_argument("--a", type=int, required=True)
    expect.add_argument("--b", type=int, required=True)
    expect.add_argument("--hbar", type=float, required=True)

    scan = actions.add_parser("limit-scan", help="Weak classical limit over N")
    scan.add_argument("--x0", type=float, required=True)
    scan.add_argument("--p0", type=float, required=True)
    scan.add_argument("--a", type=int, required=True)
    scan.add_argument("--b", type=int, required=True)
    scan.add_argument("--n-list", type=int_list, required=True)
    scan.add_argument("--variant", choices=["corrected", "bv"], default="corrected")
    scan.add_argument("--steps", type=int, default=1)

    noncommute = actions.add_parser("noncommute", help="<psi|L E_p|phi> against its limit")
    noncommute.add_argument("--hbar-list", type=float_list, required=True)
    noncommute.add_argument("--k-max", type=int, default=None)


def _add_spectrum(subparsers) -> None:
    parser = subparsers.add_parser("spectrum", help="Sorted eigenphases as CSV")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--variant", choices=["corrected", "bv"], default="corrected")
    parser.add_argument("--sectors", action="store_true",
                        help="Split by parity (corrected variant only)")


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subcommand per surface"""
    parser = argparse.ArgumentParser(
        prog="baker-quant",
        description="Quantized baker's map: propagators, checks and semiclassical scans",
    )
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Diagnostics level on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_propagator(subparsers)
    _add_verify(subparsers)
    _add_classical(subparsers)
    _add_semiclassics(subparsers)
    _add_spectrum(subparsers)
    return parser
