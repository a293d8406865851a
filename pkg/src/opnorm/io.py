"""Matrix file formats, CSV report writing, and fixed-precision rendering.

Two input formats:

  CSV    one row per line, comma-separated real entries
  JSON   {"n": int, "entries": [[[re, im], ...], ...]} with 2-element cells

All rendered numbers use 12 significant digits so output is reproducible
byte for byte.
"""
from __future__ import annotations

import json
import os
from typing import Optional

import numpy as np

from .structure import (
    TAG_CIRCULANT,
    TAG_GENERAL,
    TAG_IDENTITY,
    TAG_MAGIC,
    TAG_SCALED_ALL_ONES,
    TAG_UNITARY_PERMUTATION,
    MatrixClass,
)

__all__ = [
    "MatrixParseError",
    "format_number",
    "format_complex",
    "parse_matrix_csv",
    "parse_matrix_json",
    "load_matrix",
    "describe_class",
    "scan_csv",
    "report_csv_header",
]

SCAN_CSV_HEADER = "u,v,value,status,method"
REPORT_CSV_HEADER = "theta,u,v,value,status,rt_bound,slack,flag"


class MatrixParseError(ValueError):
    """Malformed matrix input; carries a 1-based line and column when known."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return f"parse error: {self.message}"
        return f"parse error at line {self.line} column {self.col}: {self.message}"


def format_number(x: float) -> str:
    """Render with 12 significant digits; -0 collapses to 0."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return format(x, ".12g")


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return format_number(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{format_number(z.real)}{sign}{format_number(abs(z.imag))}j"


def parse_matrix_csv(text: str) -> np.ndarray:
    """Parse comma-separated real rows; blank lines are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        row = []
        for colno, part in enumerate(s.split(","), 1):
            t = part.strip()
            try:
                row.append(float(t))
            except ValueError:
                raise MatrixParseError(f"bad entry {t!r}", line=lineno, col=colno) from None
        rows.append((lineno, row))
    if not rows:
        raise MatrixParseError("no matrix rows found", line=1, col=1)
    n = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != n:
            raise MatrixParseError(f"expected {n} entries per row, got {len(row)}",
                                   line=lineno, col=1)
    if len(rows) != n:
        raise MatrixParseError(f"matrix must be square, got {len(rows)} rows of {n} entries",
                               line=rows[-1][0], col=1)
    return np.asarray([row for _, row in rows], dtype=complex)


def parse_matrix_json(text: str) -> np.ndarray:
    """Parse the JSON matrix document with [re, im] cells."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixParseError(e.msg, line=e.lineno, col=e.colno) from None
    if not isinstance(data, dict) or "n" not in data or "entries" not in data:
        raise MatrixParseError('top level must be an object with "n" and "entries"')
    n = data["n"]
    entries = data["entries"]
    if not isinstance(n, int) or n < 1:
        raise MatrixParseError('"n" must be a positive integer')
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixParseError(f'"entries" must be a list of {n} rows')
    A = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixParseError(f"entries[{i}] must be a list of {n} cells")
        for j, cell in enumerate(row):
            if (not isinstance(cell, list) or len(cell) != 2
                    or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in cell)):
                raise MatrixParseError(f"entries[{i}][{j}] must be a 2-element [re, im] array")
            A[i, j] = complex(cell[0], cell[1])
    return A


def load_matrix(path: str) -> np.ndarray:
    """Read a matrix file; .json uses the JSON format, anything else CSV."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise MatrixParseError(f"cannot read {path}: {e.strerror or e}") from None
    if os.path.splitext(path)[1].lower() == ".json":
        return parse_matrix_json(text)
    return parse_matrix_csv(text)


def describe_class(klass: MatrixClass) -> str:
    """One-line rendering of a classification: tag plus its parameters."""
    if klass.tag == TAG_IDENTITY or klass.tag == TAG_GENERAL:
        return klass.tag
    if klass.tag == TAG_UNITARY_PERMUTATION:
        sigma = ",".join(str(s) for s in klass.sigma)
        phases = ",".join(format_complex(ph) for ph in klass.phases)
        return f"unitary-permutation sigma=({sigma}) phases=({phases})"
    if klass.tag == TAG_SCALED_ALL_ONES:
        return f"scaled-all-ones a={format_number(klass.scale)}"
    if klass.tag == TAG_CIRCULANT:
        gen = ",".join(format_number(g) for g in klass.generators)
        sigma = ",".join(str(s) for s in klass.sigma)
        return f"circulant a=({gen}) sigma=({sigma})"
    if klass.tag == TAG_MAGIC:
        return f"magic-squared alpha={format_number(klass.alpha)}"
    return klass.tag


def scan_csv(cells) -> str:
    """Render scan cells (attributes u, v, value, status, method) as CSV."""
    lines = [SCAN_CSV_HEADER]
    for c in cells:
        lines.append(",".join([
            format_number(c.u),
            format_number(c.v),
            format_number(c.value),
            c.status,
            c.method,
        ]))
    return "\n".join(lines) + "\n"


def report_csv_header() -> str:
    return REPORT_CSV_HEADER
