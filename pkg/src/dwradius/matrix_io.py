"""JSON matrix format.

Either ``{"rows": r, "cols": c, "data": [[re, im], ...]}`` with row-major
entries, or a bare nested array ``[[[re, im], ...], ...]``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError


def _pair(item, where: str) -> complex:
    if (not isinstance(item, (list, tuple)) or len(item) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)):
        raise ParseError(f"{where}: expected a [re, im] pair of numbers, got {item!r}")
    re, im = float(item[0]), float(item[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"{where}: non-finite entry {item!r}")
    return complex(re, im)


def parse_matrix(obj) -> np.ndarray:
    if isinstance(obj, dict):
        try:
            rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        except KeyError as exc:
            raise ParseError(f"matrix object is missing field {exc}") from None
        if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
            raise ParseError("rows and cols must be positive integers")
        if not isinstance(data, list) or len(data) != rows * cols:
            got = len(data) if isinstance(data, list) else type(data).__name__
            raise ParseError(f"data must hold rows*cols = {rows * cols} entries, got {got}")
        flat = [_pair(v, f"entry {k}") for k, v in enumerate(data)]
        return np.array(flat, dtype=np.complex128).reshape(rows, cols)
    if isinstance(obj, list) and obj and all(isinstance(r, list) for r in obj):
        width = len(obj[0])
        if width == 0 or any(len(r) != width for r in obj):
            raise ParseError("bare matrix rows must be non-empty and of equal length")
        return np.array([[_pair(v, f"entry ({i}, {j})") for j, v in enumerate(r)]
                         for i, r in enumerate(obj)], dtype=np.complex128)
    raise ParseError("expected a matrix object or a nested array of [re, im] pairs")


def matrix_to_json(T) -> dict:
    T = np.asarray(T, dtype=np.complex128)
    return {"rows": int(T.shape[0]), "cols": int(T.shape[1]),
            "data": [[float(z.real), float(z.imag)] for z in T.ravel()]}


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_matrix(path) -> np.ndarray:
    return parse_matrix(load_json(path))
