"""Slow, independent reference computations used to cross-check the fast solvers.

None of these share code with the sweep/ascent machinery.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize


def _shell_value_2x2(T: np.ndarray, s, t):
    """sqrt(|<Tx,x>|^2 + ||Tx||^4) at x = (cos s, e^{it} sin s), broadcasting over s, t."""
    x0 = np.cos(s) + 0j
    x1 = np.exp(1j * t) * np.sin(s)
    y0 = T[0, 0] * x0 + T[0, 1] * x1
    y1 = T[1, 0] * x0 + T[1, 1] * x1
    q = np.conj(x0) * y0 + np.conj(x1) * y1
    p = np.abs(y0) ** 2 + np.abs(y1) ** 2
    return np.sqrt(np.abs(q) ** 2 + p ** 2)


def dw_bruteforce_2x2(T, grid: int = 400, polish: int = 5) -> float:
    """dw of a 2x2 matrix from an exhaustive (s, t) grid plus Nelder-Mead polish of the best cells.

    The global phase of x is fixed, so (s, t) in [0, pi/2] x [0, 2 pi) covers the sphere.
    """
    T = np.asarray(T, dtype=np.complex128)
    if T.shape != (2, 2):
        raise ValueError("brute-force oracle is only for 2x2 matrices")
    s = np.linspace(0.0, math.pi / 2.0, grid)
    t = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    S, Tt = np.meshgrid(s, t, indexing="ij")
    F = _shell_value_2x2(T, S, Tt)
    best = float(F.max())
    flat = np.argsort(F.ravel())[::-1][:polish]
    for k in flat:
        i, j = divmod(int(k), grid)
        res = minimize(lambda v: -float(_shell_value_2x2(T, v[0], v[1])), [s[i], t[j]],
                       method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 2000})
        best = max(best, -float(res.fun))
    return best


def num_radius_dense(T, points: int = 200_000) -> float:
    """w(T) as the max of the support function on a very fine angle grid (no refinement)."""
    T = np.asarray(T, dtype=np.complex128)
    best = -np.inf
    for chunk in np.array_split(np.linspace(0.0, 2.0 * math.pi, points, endpoint=False), 20):
        R = np.exp(-1j * chunk)[:, None, None] * T
        H = 0.5 * (R + np.conj(np.transpose(R, (0, 2, 1))))
        best = max(best, float(np.linalg.eigvalsh(H)[:, -1].max()))
    return best


def sup_theta_nested(T, sign: int = 1, outer: int = 720, inner: int = 720) -> float:
    """sup over theta of w(e^{i theta} T + sign T*T) by two nested angle grids."""
    T = np.asarray(T, dtype=np.complex128)
    M = T.conj().T @ T
    phis = np.linspace(0.0, 2.0 * math.pi, inner, endpoint=False)
    best = -np.inf
    for theta in np.linspace(0.0, 2.0 * math.pi, outer, endpoint=False):
        X = np.exp(1j * theta) * T + sign * M
        R = np.exp(-1j * phis)[:, None, None] * X
        H = 0.5 * (R + np.conj(np.transpose(R, (0, 2, 1))))
        best = max(best, float(np.linalg.eigvalsh(H)[:, -1].max()))
    return best


def dw_random_search(T, samples: int = 200_000, seed: int = 1) -> float:
    """Lower estimate of dw from uniform random unit vectors."""
    T = np.asarray(T, dtype=np.complex128)
    n = T.shape[0]
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    Y = X @ T.T
    q = np.sum(np.conj(X) * Y, axis=1)
    p = np.sum(np.abs(Y) ** 2, axis=1)
    return float(np.sqrt(np.abs(q) ** 2 + p ** 2).max())
