"""Optimization over the unit sphere of C^n.

Vectors are stored as rows of a ``(k, n)`` complex array so that ``k``
restarts advance together.  Gradients are returned as complex vectors ``G``
such that the real directional derivative along ``d`` is ``Re(d^H G)``.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

Objective = Callable[[np.ndarray], np.ndarray]


def random_unit_vectors(rng: np.random.Generator, k: int, n: int) -> np.ndarray:
    """Uniform points on the sphere via normalized complex Gaussians."""
    X = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
    return normalize_rows(X)


def normalize_rows(X: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(X, axis=1, keepdims=True)
    return X / np.where(norms == 0.0, 1.0, norms)


def quad_form(A: np.ndarray, X: np.ndarray) -> np.ndarray:
    """<A x, x> for every row x of X."""
    return np.einsum("ki,ki->k", X.conj(), X @ A.T)


def shell_points(T: np.ndarray, M: np.ndarray, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(<Tx, x>, ||Tx||^2) for each row, with ``M = T*T``."""
    return quad_form(T, X), quad_form(M, X).real


def dw_objective(T: np.ndarray, M: np.ndarray, X: np.ndarray) -> np.ndarray:
    """|<Tx,x>|^2 + <T*T x, x>^2, the squared shell distance."""
    q, p = shell_points(T, M, X)
    return np.abs(q) ** 2 + p ** 2


def dw_gradient(T: np.ndarray, M: np.ndarray, X: np.ndarray) -> np.ndarray:
    q, p = shell_points(T, M, X)
    TX = X @ T.T
    THX = X @ T.conj()
    MX = X @ M.T
    return 2.0 * (q.conj()[:, None] * TX + q[:, None] * THX) + 4.0 * p[:, None] * MX


def tangent_projection(X: np.ndarray, G: np.ndarray) -> np.ndarray:
    radial = np.einsum("ki,ki->k", X.conj(), G).real
    return G - radial[:, None] * X


def projected_ascent(f: Objective, grad: Objective, X0: np.ndarray, *, step0: float,
                     max_iter: int = 500, grad_tol: float = 1e-10,
                     max_halvings: int = 40,
                     stall_rtol: float = 1e-15) -> tuple[np.ndarray, np.ndarray, int]:
    """Batched projected gradient ascent with step-halving line search.

    Each row keeps its own step; a step that strictly increases ``f`` is
    accepted and doubled for the next iteration, otherwise it is halved until
    it does.  A row stops once its Riemannian gradient norm drops below
    ``grad_tol * max(1, f)``, or when no step length improves ``f`` by more
    than ``stall_rtol`` relative (the objective has hit rounding level).

    Returns ``(X, f(X), iterations_used)``.
    """
    X = normalize_rows(np.array(X0, dtype=np.complex128))
    k = X.shape[0]
    fx = f(X)
    step = np.full(k, float(step0))
    active = np.ones(k, dtype=bool)
    it = 0
    for it in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            it -= 1
            break
        Xa = X[idx]
        R = tangent_projection(Xa, grad(Xa))
        rn = np.linalg.norm(R, axis=1)
        done = rn <= grad_tol * np.maximum(1.0, np.abs(fx[idx]))
        active[idx[done]] = False
        keep = ~done
        idx, Xa, R = idx[keep], Xa[keep], R[keep]
        if idx.size == 0:
            it -= 1
            break
        t = step[idx] * 2.0
        f_old = fx[idx]
        accepted = np.zeros(idx.size, dtype=bool)
        X_new = Xa.copy()
        f_new = f_old.copy()
        for _ in range(max_halvings):
            pending = np.flatnonzero(~accepted)
            if pending.size == 0:
                break
            trial = normalize_rows(Xa[pending] + t[pending, None] * R[pending])
            ft = f(trial)
            ok = ft > f_old[pending]
            sel = pending[ok]
            X_new[sel] = trial[ok]
            f_new[sel] = ft[ok]
            accepted[sel] = True
            t[pending[~ok]] *= 0.5
        X[idx] = X_new
        fx[idx] = f_new
        step[idx] = t
        stalled = ~accepted | (f_new - f_old <= stall_rtol * np.maximum(1.0, np.abs(f_old)))
        active[idx[stalled]] = False
    return X, fx, it


def top_eigvecs(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Largest eigenvalue, its eigenvector and the spectral gap for a batch of Hermitian matrices."""
    lam, V = np.linalg.eigh(A)
    gap = lam[..., -1] - lam[..., -2] if A.shape[-1] > 1 else np.full(lam.shape[:-1], np.inf)
    return lam[..., -1], V[..., :, -1], gap


def linearized_polish(T: np.ndarray, M: np.ndarray, X: np.ndarray, max_iter: int = 200,
                      rtol: float = 1e-15) -> tuple[np.ndarray, np.ndarray]:
    """Monotone fixed-point ascent of the squared shell distance.

    With z = (<Tx,x>, ||Tx||^2) the next iterate is the top eigenvector of
    Re(conj(q) T) + p T*T, which maximizes the linearization <z, z(x')>.  The
    objective is convex in z, so each step cannot decrease it.
    """
    X = normalize_rows(np.array(X, dtype=np.complex128))
    fx = dw_objective(T, M, X)
    for _ in range(max_iter):
        q, p = shell_points(T, M, X)
        A = 0.5 * (q.conj()[:, None, None] * T + q[:, None, None] * T.conj().T) + p[:, None, None] * M
        _, V, _ = top_eigvecs(A)
        f_new = dw_objective(T, M, V)
        better = f_new > fx
        if not np.any(better):
            break
        gain = np.max((f_new - fx)[better] / np.maximum(1.0, fx[better]))
        X[better] = V[better]
        fx[better] = f_new[better]
        if gain <= rtol:
            break
    return X, fx
