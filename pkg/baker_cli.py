#!/usr/bin/env python3
"""
baker-quant - quantized baker's map on the command line.

    baker-quant propagator --n 8 --variant corrected --format json
    baker-quant verify --n-list 2,4,8 --checks unitarity,parity
    baker-quant classical map --x 0.3 --p 0.4 --iters 5
    baker-quant semiclassics limit-scan --x0 0.3 --p0 0.4 --a 1 --b 0 --n-list 16,64,256
    baker-quant spectrum --n 64 --sectors
"""

import sys
from typing import List, Optional

from services.cli_service import run_cli


def main(argv: Optional[List[str]] = None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
