"""JSON payloads for matrix tuples, matrices, verdicts and certificates.

Complex scalars travel as two-element [re, im] arrays; matrix entries are
row-major. Parsing rejects ragged arrays and non-finite numbers.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .genericity import GenericityCertificate
from .linalg import MatrixTuple


class JsonFormatError(Exception):
    """Raised when a payload does not match the documented schema."""


def _pair(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _entry(value, where: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise JsonFormatError(f"{where}: complex entries must be [re, im] numbers")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise JsonFormatError(f"{where}: non-finite entry")
    return complex(re, im)


def _entries(rows: int, cols: int, payload, where: str) -> np.ndarray:
    if not isinstance(payload, list) or len(payload) != rows:
        raise JsonFormatError(f"{where}: expected {rows} rows")
    out = np.empty((rows, cols), dtype=complex)
    for r, row in enumerate(payload):
        if not isinstance(row, list) or len(row) != cols:
            raise JsonFormatError(f"{where}: row {r} must have {cols} entries")
        for c, value in enumerate(row):
            out[r, c] = _entry(value, f"{where}[{r}][{c}]")
    return out


def _dim(obj, key: str, where: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise JsonFormatError(f"{where}: '{key}' must be a positive integer")
    return value


def matrix_to_obj(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": [[_pair(v) for v in row] for row in m],
    }


def obj_to_matrix(obj, where: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise JsonFormatError(f"{where}: expected an object")
    rows = _dim(obj, "rows", where)
    cols = _dim(obj, "cols", where)
    return _entries(rows, cols, obj.get("entries"), f"{where}.entries")


def tuple_to_obj(t: MatrixTuple) -> dict:
    return {
        "g": t.g,
        "rows": t.rows,
        "cols": t.cols,
        "matrices": [[[_pair(v) for v in row] for row in m] for m in t],
    }


def obj_to_tuple(obj, where: str = "tuple") -> MatrixTuple:
    if not isinstance(obj, dict):
        raise JsonFormatError(f"{where}: expected an object")
    g = _dim(obj, "g", where)
    rows = _dim(obj, "rows", where)
    cols = _dim(obj, "cols", where)
    mats = obj.get("matrices")
    if not isinstance(mats, list) or len(mats) != g:
        raise JsonFormatError(f"{where}: 'matrices' must list exactly g={g} matrices")
    data = np.stack(
        [_entries(rows, cols, m, f"{where}.matrices[{j}]") for j, m in enumerate(mats)]
    )
    return MatrixTuple(data)


def certificate_to_obj(cert: GenericityCertificate) -> dict:
    def points(items):
        return [
            {
                "point": [_pair(v) for v in kp.point],
                "kernel_vector": [_pair(v) for v in kp.kernel_vector],
            }
            for kp in items
        ]

    return {
        "alphas": points(cert.alphas),
        "betas": points(cert.betas),
        "hyperbasis_margin": float(cert.hyperbasis_margin),
        "basis_margin": float(cert.basis_margin),
        "trials_used": cert.trials_used,
        "seed": cert.seed,
    }


def load_document(path):
    """Parse a JSON file, reporting line/column on malformed input."""
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise JsonFormatError(
            f"{path}:{err.lineno}:{err.colno}: {err.msg}"
        ) from err


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "))
