"""Dense complex linear algebra on small matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The Hermitian
eigensolver is a cyclic Jacobi iteration, which is deterministic and accurate
for the matrix sizes this package targets (n <= 64).  Batched sweeps elsewhere
in the package call LAPACK directly for speed and are cross-checked against
this solver in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, InvalidMatrix, NegativeSpectrum, NoConvergence, NotHermitian

HERMITIAN_RTOL = 1e-12
JACOBI_RTOL = 1e-13
JACOBI_MAX_SWEEPS = 100
NEGATIVE_TOL = 1e-10


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # orthonormal columns

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def as_matrix(obj) -> np.ndarray:
    """Coerce ``obj`` to a finite 2-D complex array (copied)."""
    try:
        T = np.array(obj, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrix(f"cannot interpret input as a complex matrix: {exc}") from exc
    if T.ndim != 2 or 0 in T.shape:
        raise InvalidMatrix(f"expected a non-empty 2-D array, got shape {T.shape}")
    if not np.all(np.isfinite(T)):
        raise InvalidMatrix("matrix has non-finite entries")
    return T


def as_square(obj) -> np.ndarray:
    T = as_matrix(obj)
    if T.shape[0] != T.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {T.shape}")
    return T


def adjoint(T) -> np.ndarray:
    return as_matrix(T).conj().T


def real_part(T: np.ndarray) -> np.ndarray:
    """Hermitian part (T + T*)/2."""
    return 0.5 * (T + T.conj().T)


def imag_part(T: np.ndarray) -> np.ndarray:
    """Hermitian matrix K with T = Re(T) + iK."""
    return -0.5j * (T - T.conj().T)


def gram(T: np.ndarray) -> np.ndarray:
    """T*T, symmetrized against rounding."""
    M = T.conj().T @ T
    return 0.5 * (M + M.conj().T)


def is_hermitian(H: np.ndarray, rtol: float = HERMITIAN_RTOL) -> bool:
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        return False
    return np.linalg.norm(H - H.conj().T) <= rtol * (1.0 + np.linalg.norm(H))


def _check_hermitian(H) -> np.ndarray:
    H = as_square(H)
    if not is_hermitian(H):
        defect = np.linalg.norm(H - H.conj().T)
        raise NotHermitian(f"matrix is not Hermitian (||H - H*||_F = {defect:.3e})")
    return H


def _offdiag_norm(A: np.ndarray) -> float:
    off = A[~np.eye(A.shape[0], dtype=bool)]
    return float(np.linalg.norm(off))


def hermitian_eig(H, max_sweeps: int = JACOBI_MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each (p, q) rotation first removes the phase of ``A[p, q]`` and then applies
    the classical real Jacobi rotation, so the iteration stays in complex
    arithmetic without forming a real 2n x 2n embedding.

    Raises
    ------
    NotHermitian
        If ``||H - H*||_F > 1e-12 (1 + ||H||_F)``.
    NoConvergence
        If the off-diagonal mass is still above ``1e-13 ||H||_F`` after
        ``max_sweeps`` sweeps.
    """
    H = _check_hermitian(H)
    n = H.shape[0]
    A = 0.5 * (H + H.conj().T)
    V = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_RTOL * np.linalg.norm(A)

    for _ in range(max_sweeps):
        if _offdiag_norm(A) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                b = abs(apq)
                # negligible against the diagonal: zero it (no rotation, avoids denormal phases)
                if b < 1e-18 * (abs(A[p, p]) + abs(A[q, q])) or b < 1e-280:
                    A[p, q] = A[q, p] = 0.0
                    continue
                phase = apq / b
                phase /= abs(phase)
                theta = (A[q, q].real - A[p, p].real) / (2.0 * b)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                G = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                V[:, idx] = V[:, idx] @ G
    else:
        if _offdiag_norm(A) > threshold:
            raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    evals = np.diag(A).real.copy()
    order = np.argsort(evals, kind="stable")
    return EigenDecomposition(evals[order], V[:, order])


def singular_values(T) -> np.ndarray:
    """Singular values in descending order, from the eigenvalues of T*T."""
    T = as_matrix(T)
    evals = hermitian_eig(gram(T)).eigenvalues
    return np.sqrt(np.clip(evals[::-1], 0.0, None))


def _apply_scalar(f: Callable, lam: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(f(lam), dtype=float)
        if out.shape == lam.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(f(float(x))) for x in lam])


def herm_fn(H, f: Callable) -> np.ndarray:
    """Functional calculus V diag(f(lambda)) V* for positive semidefinite H.

    Eigenvalues in [-1e-10, 0) (relative to max(1, ||H||)) are treated as
    rounding noise and clamped to zero before ``f`` is applied.
    """
    eig = hermitian_eig(H)
    lam = eig.eigenvalues
    tol = NEGATIVE_TOL * max(1.0, float(np.max(np.abs(lam))))
    if lam[0] < -tol:
        raise NegativeSpectrum(f"smallest eigenvalue {lam[0]:.3e} is negative")
    lam = np.clip(lam, 0.0, None)
    V = eig.eigenvectors
    F = (V * _apply_scalar(f, lam)) @ V.conj().T
    return 0.5 * (F + F.conj().T)


def herm_power(H, p: float) -> np.ndarray:
    """H**p for positive semidefinite H and p > 0."""
    return herm_fn(H, lambda t: np.power(t, p))


def matrix_abs(T) -> np.ndarray:
    """|T| = (T*T)^(1/2)."""
    return herm_fn(gram(as_square(T)), np.sqrt)


def hermitian_norm(H: np.ndarray) -> float:
    """Spectral norm of a Hermitian matrix (largest |eigenvalue|), via LAPACK."""
    lam = np.linalg.eigvalsh(0.5 * (H + H.conj().T))
    return float(max(abs(lam[0]), abs(lam[-1])))


def spectral_norm(T: np.ndarray) -> float:
    """Largest singular value via LAPACK; used in inner loops."""
    return float(np.sqrt(max(np.linalg.eigvalsh(gram(T))[-1], 0.0)))
