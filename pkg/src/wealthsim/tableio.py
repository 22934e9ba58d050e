"""Plain-text tables: CSV with '#'-prefixed metadata, lossless floats.

Every exported file follows the same shape::

    # params_hash: 5f1c2b...
    # seed: 17
    # units: t=days, mean_wealth=currency
    t,mean_wealth
    0,1000
    30,1000.0000000000001

Metadata lines come before the header, one ``# key: value`` each. Floats are
serialized with 17 significant digits so that reading a file back reproduces
the written float64 values bit-for-bit; integer-valued columns are written
and read as integers (seeds are 64-bit, wider than a float64 mantissa).
"""

from __future__ import annotations

import re
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import ParseError

_INT_RE = re.compile(r"^[+-]?\d+$")


def format_value(v) -> str:
    """One cell: integers verbatim, floats at 17 significant digits.

    Integral floats get a trailing '.0' so a column's int/float nature
    survives the round trip. Strings pass through (they must not contain
    commas or newlines).
    """
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    s = format(float(v), ".17g")
    if not any(ch in s for ch in ".eni"):  # no '.', exponent, nan or inf
        s += ".0"
    return s


def write_table(path, header: Sequence[str], columns: Sequence[np.ndarray],
                metadata: Dict[str, str]) -> None:
    """Write a metadata-headed CSV with '\\n' newlines. Columns must be equal length."""
    if len(header) != len(columns):
        raise ValueError("one header name per column required")
    cols = [np.asarray(c) for c in columns]
    n = cols[0].shape[0] if cols else 0
    for c in cols:
        if c.shape != (n,):
            raise ValueError("all columns must be 1-d and equally long")
    lines: List[str] = [f"# {k}: {v}" for k, v in metadata.items()]
    lines.append(",".join(header))
    for i in range(n):
        lines.append(",".join(format_value(c[i]) for c in cols))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_table(path) -> Tuple[Dict[str, str], List[str], Dict[str, np.ndarray]]:
    """Read a table written by write_table.

    Returns (metadata, header, columns); a column is int64 when every one of
    its cells is a plain integer literal, float64 otherwise.
    """
    metadata: Dict[str, str] = {}
    header: List[str] = []
    rows: List[List[str]] = []
    problems: List[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                if header:
                    continue  # stray comment after header: ignore
                body = line[1:].strip()
                key, sep, value = body.partition(":")
                if sep:
                    metadata[key.strip()] = value.strip()
                continue
            cells = line.split(",")
            if not header:
                header = [c.strip() for c in cells]
                continue
            if len(cells) != len(header):
                problems.append(f"line {ln}: expected {len(header)} cells, got {len(cells)}")
                continue
            rows.append(cells)
    if not header:
        problems.append("no header line found")
    if problems:
        raise ParseError(problems)

    columns: Dict[str, np.ndarray] = {}
    for j, name in enumerate(header):
        cells = [r[j] for r in rows]
        if cells and all(_INT_RE.match(c) for c in cells):
            columns[name] = np.array([int(c) for c in cells], dtype=np.int64)
        else:
            try:
                columns[name] = np.array([float(c) for c in cells], dtype=np.float64)
            except ValueError:
                columns[name] = np.array(cells, dtype=str)
    return metadata, header, columns
