"""
Deterministic text serialisation for matrices and tables.

Reals are printed with 17 significant digits, '.' as decimal separator and
negative zero folded to zero, so identical inputs give identical bytes.
"""

import csv
import io
import json
from typing import Iterable, List, Sequence, TextIO, Tuple

import numpy as np

from services.kinematics_service import DimensionError

MATRIX_CSV_HEADER = ("row", "col", "re", "im")


def format_real(value: float) -> str:
    """17 significant digits; -0.0 prints as 0"""
    return format(float(value) + 0.0, ".17g")


def write_rows(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    """CSV with '\\n' line endings"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_matrix_csv(stream: TextIO, matrix: np.ndarray) -> None:
    """Rows in (row, col) lexicographic order"""
    rows = (
        (str(i), str(j), format_real(matrix[i, j].real), format_real(matrix[i, j].imag))
        for i in range(matrix.shape[0])
        for j in range(matrix.shape[1])
    )
    write_rows(stream, MATRIX_CSV_HEADER, rows)


def _json_grid(values: np.ndarray) -> str:
    return "[" + ", ".join(
        "[" + ", ".join(format_real(v) for v in row) + "]" for row in values
    ) + "]"


def write_matrix_json(stream: TextIO, matrix: np.ndarray, variant: str) -> None:
    """{"n": int, "variant": str, "re": [[...]], "im": [[...]]}, row-major"""
    stream.write(
        "{"
        f"\"n\": {matrix.shape[0]}, "
        f"\"variant\": {json.dumps(variant)}, "
        f"\"re\": {_json_grid(matrix.real)}, "
        f"\"im\": {_json_grid(matrix.imag)}"
        "}\n"
    )


def read_matrix_json(text: str) -> Tuple[int, str, np.ndarray]:
    """Inverse of write_matrix_json"""
    payload = json.loads(text)
    re = np.asarray(payload["re"], dtype=float)
    im = np.asarray(payload["im"], dtype=float)
    n = int(payload["n"])
    if re.shape != (n, n) or im.shape != (n, n):
        raise DimensionError(f"Matrix payload does not match n={n}")
    return n, str(payload["variant"]), re + 1j * im


def read_matrix_csv(text: str) -> np.ndarray:
    """Inverse of write_matrix_csv"""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != MATRIX_CSV_HEADER:
        raise ValueError(f"Expected header {','.join(MATRIX_CSV_HEADER)}, got {header}")

    entries: List[Tuple[int, int, complex]] = [
        (int(row), int(col), complex(float(re), float(im)))
        for row, col, re, im in reader
    ]
    n = int(round(len(entries) ** 0.5))
    if n * n != len(entries):
        raise DimensionError(f"{len(entries)} entries do not form a square matrix")

    matrix = np.zeros((n, n), dtype=complex)
    for row, col, value in entries:
        matrix[row, col] = value
    return matrix
