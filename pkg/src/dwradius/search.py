"""One-dimensional maximization of periodic functions: coarse grid, then golden section."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
TWO_PI = 2.0 * math.pi


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12,
                       max_iter: int = 200) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on [a, b] until the bracket is narrower than ``tol``.

    Returns the best point seen and its value (not just the final midpoint).
    """
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = f(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = f(d)
            if fd > best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def periodic_grid(n: int) -> np.ndarray:
    return np.arange(n) * (TWO_PI / n)


def local_maxima_periodic(values: np.ndarray, k: int) -> np.ndarray:
    """Indices of the ``k`` largest local maxima of a periodic sequence.

    Ties go to the smaller index.
    """
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    peaks = np.flatnonzero((values >= left) & (values >= right))
    if peaks.size == 0:
        peaks = np.array([int(np.argmax(values))])
    order = np.argsort(-values[peaks], kind="stable")
    return peaks[order[:k]]


def maximize_periodic(batch: Callable[[np.ndarray], np.ndarray], scalar: Callable[[float], float],
                      n_grid: int, tol: float, n_brackets: int = 3) -> tuple[float, float]:
    """Maximize a 2*pi-periodic function.

    ``batch`` evaluates the function on an array of angles (used for the coarse
    grid), ``scalar`` on a single angle (used for golden-section refinement of
    the best ``n_brackets`` grid peaks).  Returns ``(theta, value)``.
    """
    thetas = periodic_grid(n_grid)
    values = np.asarray(batch(thetas), dtype=float)
    step = TWO_PI / n_grid
    j0 = int(np.argmax(values))
    best_t, best_v = float(thetas[j0]), float(values[j0])
    for j in local_maxima_periodic(values, n_brackets):
        t, v = golden_section_max(scalar, thetas[j] - step, thetas[j] + step, tol)
        if v > best_v:
            best_t, best_v = t, v
    return best_t % TWO_PI, best_v
