"""Named example matrices addressable from the command line."""

from __future__ import annotations

import numpy as np

from . import blocks
from .errors import ParseError

I2 = np.eye(2)
Z2 = np.zeros((2, 2))


def _c(rows) -> np.ndarray:
    return np.array(rows, dtype=np.complex128)


def _builtins() -> dict[str, tuple[np.ndarray, str]]:
    ib = blocks.assemble(blocks.upper_left_spec(_c([[0, 2], [0, 0]])))
    nil_big = blocks.assemble(blocks.nilpotent_spec(_c([[0, 1], [0, 1]])))
    nil_small = blocks.assemble(blocks.nilpotent_spec(_c([[0.3, 0.4], [0, 0.5]])))
    anti_lower = blocks.assemble(blocks.antidiag_spec(_c([[1, 0], [0, 0]]), _c([[1j, 0], [0, 0]])))
    anti_abs = blocks.assemble(blocks.antidiag_spec(_c([[1, 0], [0, 0]]), _c([[0, 0], [0, 1j]])))
    return {
        "t1": (_c([[0, 1], [2, 0]]), "comparison matrix [[0,1],[2,0]]"),
        "t2": (_c([[0, 2], [0, 0]]), "comparison matrix [[0,2],[0,0]]"),
        "t3": (_c([[1, 1], [0, 0]]), "comparison matrix [[1,1],[0,0]]"),
        "t4": (_c([[1, 1], [0, 1]]), "comparison matrix [[1,1],[0,1]]"),
        "identity": (_c(I2), "2x2 identity, normaloid"),
        "shift2": (_c([[0, 1], [0, 0]]), "2x2 nilpotent shift"),
        "diag-1-2": (_c(np.diag([-1, -2])), "diag(-1,-2)"),
        "diag1-1": (_c(np.diag([1, -1])), "diag(1,-1)"),
        "counter3": (_c([[3 / 8, 0, 0], [0, 0, 0.5], [0, 0, 0]]),
                     "3x3 matrix whose norm vectors have zero quadratic form but dw != ||T||^2"),
        "ib": (ib, "[[I,B],[0,0]] with B=[[0,2],[0,0]]"),
        "nilpotent-big": (nil_big, "[[0,B],[0,0]] with B=[[0,1],[0,1]]"),
        "nilpotent-small": (nil_small, "[[0,B],[0,0]] with B=[[0.3,0.4],[0,0.5]]"),
        "antidiag-lower": (anti_lower, "[[0,A],[B,0]] with A=diag(1,0), B=diag(i,0)"),
        "antidiag-abs": (anti_abs, "[[0,A],[B,0]] with A=diag(1,0), B=diag(0,i)"),
    }


def _block_builtins() -> dict[str, blocks.BlockSpec]:
    one, zero = np.ones((1, 1)), np.zeros((1, 1))
    return {
        "ib": blocks.upper_left_spec(_c([[0, 2], [0, 0]])),
        "nilpotent-big": blocks.nilpotent_spec(_c([[0, 1], [0, 1]])),
        "nilpotent-small": blocks.nilpotent_spec(_c([[0.3, 0.4], [0, 0.5]])),
        "antidiag-lower": blocks.antidiag_spec(_c([[1, 0], [0, 0]]), _c([[1j, 0], [0, 0]])),
        "antidiag-abs": blocks.antidiag_spec(_c([[1, 0], [0, 0]]), _c([[0, 0], [0, 1j]])),
        "antidiag-2i-i": blocks.antidiag_spec(2 * I2, I2),
        "antidiag-i-i": blocks.antidiag_spec(I2, I2),
        "triangular-ones": blocks.triangular_spec(one, one, one),
        "triangular-t3": blocks.triangular_spec(one, one, zero),
    }


BUILTINS = _builtins()
BLOCK_BUILTINS = _block_builtins()


def builtin_matrix(name: str) -> np.ndarray:
    try:
        return BUILTINS[name][0].copy()
    except KeyError:
        raise ParseError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None


def builtin_block(name: str) -> blocks.BlockSpec:
    try:
        return BLOCK_BUILTINS[name]
    except KeyError:
        raise ParseError(f"unknown block builtin {name!r}; choose from {sorted(BLOCK_BUILTINS)}") from None
