"""JSON encodings for matrices and block matrices.

A matrix is ``{"n": n, "data": [[[re, im], ...], ...]}`` in row-major order.
Floats are written with ``repr`` precision, which round-trips doubles exactly.
"""
from __future__ import annotations

import json

import numpy as np

from .core import as_matrix
from .errors import DimensionError, NumericalError


def matrix_to_dict(A) -> dict:
    A = as_matrix(A)
    return {
        "n": A.shape[0],
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def matrix_from_dict(obj: dict) -> np.ndarray:
    try:
        n = int(obj["n"])
        rows = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DimensionError(f"malformed matrix object: {exc}") from exc
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DimensionError(f"matrix data is not {n}x{n}")
    try:
        arr = np.array(rows, dtype=float)
    except ValueError as exc:
        raise DimensionError(f"matrix entries must be [re, im] pairs: {exc}") from exc
    if arr.shape != (n, n, 2):
        raise DimensionError("matrix entries must be [re, im] pairs")
    if not np.all(np.isfinite(arr)):
        raise NumericalError("matrix data contains non-finite values")
    return arr[..., 0] + 1j * arr[..., 1]


def dumps_matrix(A) -> str:
    return json.dumps(matrix_to_dict(A))


def loads_matrix(text: str) -> np.ndarray:
    return matrix_from_dict(json.loads(text))


def load_operand(path):
    """Read a matrix or block JSON file."""
    from .blocks import Block2x2

    with open(path) as fh:
        obj = json.load(fh)
    if "data" in obj:
        return matrix_from_dict(obj)
    if all(k in obj for k in ("A", "X", "Ystar", "B")):
        return Block2x2.from_dict(obj)
    raise DimensionError(f"{path}: neither a matrix nor a block object")
