"""Matrix and signal file formats used by the CLI.

CSV: a header line ``# rows,cols,kind`` followed by one comma-separated
matrix row per line.  Floats are rendered with shortest-roundtrip repr,
so integer matrices round-trip losslessly and reals bit-exactly.
Signals are single-column CSVs.

JSON: ``{"name", "rows", "cols", "kind", "provenance", "entries"}`` with
the same kind vocabulary.  The kind constrains the entries and is
validated on load: ``boolean`` means {0,1}, ``sign`` means {-1,+1},
``real`` any finite value.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import BadShape
from .stp import as_matrix, as_signal

__all__ = [
    "KINDS",
    "save_matrix",
    "load_matrix",
    "save_signal",
    "load_signal",
]

KINDS = ("real", "sign", "boolean")


def _validate_kind(a: np.ndarray, kind: str) -> None:
    if kind not in KINDS:
        raise BadShape(f"unknown kind {kind!r}; expected one of {KINDS}")
    if kind == "boolean" and not np.all(np.isin(a, (0.0, 1.0))):
        raise BadShape("boolean matrix must contain only 0 and 1")
    if kind == "sign" and not np.all(np.isin(a, (-1.0, 1.0))):
        raise BadShape("sign matrix must contain only -1 and +1")


def _render(v: float, kind: str) -> str:
    if kind in ("sign", "boolean") or float(v).is_integer():
        return str(int(v))
    return repr(float(v))


def save_matrix(path, a, kind: str = "real", name: str | None = None,
                provenance: dict | None = None) -> None:
    """Write a matrix as CSV or JSON depending on the file suffix."""
    a = as_matrix(a)
    _validate_kind(a, kind)
    path = Path(path)
    if path.suffix.lower() == ".json":
        doc = {
            "name": name,
            "rows": int(a.shape[0]),
            "cols": int(a.shape[1]),
            "kind": kind,
            "provenance": provenance,
            "entries": [[float(v) for v in row] for row in a],
        }
        path.write_text(json.dumps(doc, indent=2) + "\n")
        return
    lines = [f"# {a.shape[0]},{a.shape[1]},{kind}"]
    for row in a:
        lines.append(",".join(_render(v, kind) for v in row))
    path.write_text("\n".join(lines) + "\n")


def load_matrix(path):
    """Read a matrix (CSV or JSON); returns (array, metadata dict)."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        doc = json.loads(path.read_text())
        a = as_matrix(doc["entries"])
        meta = {
            "rows": int(doc["rows"]),
            "cols": int(doc["cols"]),
            "kind": doc.get("kind", "real"),
            "name": doc.get("name"),
            "provenance": doc.get("provenance"),
        }
    else:
        lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise BadShape(f"{path}: missing '# rows,cols,kind' header")
        fields = [f.strip() for f in lines[0].lstrip("#").split(",")]
        if len(fields) != 3:
            raise BadShape(f"{path}: malformed header {lines[0]!r}")
        rows, cols, kind = int(fields[0]), int(fields[1]), fields[2]
        a = as_matrix([[float(v) for v in ln.split(",")] for ln in lines[1:]])
        meta = {"rows": rows, "cols": cols, "kind": kind, "name": None, "provenance": None}
    if a.shape != (meta["rows"], meta["cols"]):
        raise BadShape(
            f"{path}: declared shape {(meta['rows'], meta['cols'])} != parsed {a.shape}"
        )
    _validate_kind(a, meta["kind"])
    return a, meta


def save_signal(path, x, kind: str = "real") -> None:
    """Write a signal as a single-column CSV/JSON matrix."""
    x = as_signal(x)
    save_matrix(path, x.reshape(-1, 1), kind=kind)


def load_signal(path) -> np.ndarray:
    """Read a single-column matrix file back as a signal."""
    a, _ = load_matrix(path)
    if a.shape[1] != 1:
        raise BadShape(f"{path}: signals must be single-column, got {a.shape[1]} columns")
    return a.reshape(-1)
