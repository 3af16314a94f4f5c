"""Scalar numerical-range quantities of a square matrix and their witnesses.

All angular searches are built on the support function of the numerical range,
``h(theta) = lambda_max(Re(e^{-i theta} T))``.  The Davis-Wielandt radius uses
the same idea one dimension up: the farthest point of the shell
``{(<Tx,x>, ||Tx||^2)}`` from the origin is exposed by a direction
``(cos(phi) e^{i theta}, sin(phi))`` whose support value is the top eigenvalue
of ``cos(phi) Re(e^{-i theta} T) + sin(phi) T*T``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, SearchConfig
from .linalg import as_square, gram, hermitian_eig, imag_part, real_part, singular_values
from .search import golden_section_max, local_maxima_periodic, maximize_periodic, periodic_grid
from .sphere import (
    dw_gradient,
    dw_objective,
    linearized_polish,
    normalize_rows,
    projected_ascent,
    quad_form,
    random_unit_vectors,
    top_eigvecs,
)


@dataclass(frozen=True)
class Witness:
    vector: np.ndarray
    value: float


@dataclass(frozen=True)
class NRProfile:
    op_norm: float
    min_modulus: float
    num_radius: float
    crawford: float
    dw_estimate: float
    witnesses: dict[str, Witness]
    solver_meta: dict = field(default_factory=dict)

    def sandwich_violations(self, tol: float = 1e-6) -> list[str]:
        """Names of the profile invariants that fail beyond ``tol``."""
        w, nrm, dw = self.num_radius, self.op_norm, self.dw_estimate
        checks = {
            "min_modulus<=op_norm": self.min_modulus <= nrm + tol,
            "num_radius<=op_norm": w <= nrm + tol,
            "op_norm<=2*num_radius": nrm <= 2.0 * w + tol,
            "crawford<=num_radius": self.crawford <= w + tol,
            "classic_lower<=dw": max(w, nrm ** 2) <= dw + tol,
            "dw<=classic_upper": dw <= math.sqrt(w ** 2 + nrm ** 4) + tol,
        }
        return [name for name, ok in checks.items() if not ok]


def _rotations(T: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Re(e^{-i theta} T) for every theta, shape (len(thetas), n, n)."""
    R, K = real_part(T), imag_part(T)
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    return c * R + s * K


def _rotation(T: np.ndarray, theta: float) -> np.ndarray:
    return math.cos(theta) * real_part(T) + math.sin(theta) * imag_part(T)


def _lmax(H: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(H)[..., -1]


def _witness(vector: np.ndarray, value: float) -> Witness:
    v = np.asarray(vector, dtype=np.complex128)
    return Witness(v / np.linalg.norm(v), float(value))


def qf_modulus(T: np.ndarray, x: np.ndarray) -> float:
    """|<Tx, x>| for a single vector."""
    return float(abs(np.vdot(x, T @ x)))


# ---------------------------------------------------------------- norms


def op_norm(T) -> float:
    return float(singular_values(as_square(T))[0])


def min_modulus(T) -> float:
    return float(singular_values(as_square(T))[-1])


def _norm_witnesses(T: np.ndarray) -> tuple[Witness, Witness]:
    eig = hermitian_eig(gram(T))
    top, bottom = eig.eigenvectors[:, -1], eig.eigenvectors[:, 0]
    return (_witness(top, np.linalg.norm(T @ top)), _witness(bottom, np.linalg.norm(T @ bottom)))


# ---------------------------------------------------------------- numerical range


def support_function(T, theta: float) -> tuple[float, Witness]:
    """h(theta) = lambda_max(Re(e^{-i theta} T)) with its top eigenvector.

    The witness value is ``Re(e^{-i theta} <Tx, x>)``, which equals h(theta).
    """
    T = as_square(T)
    lam, V = np.linalg.eigh(_rotation(T, theta))
    x = V[:, -1]
    value = (np.exp(-1j * theta) * np.vdot(x, T @ x)).real
    return float(lam[-1]), _witness(x, value)


def _max_support(T: np.ndarray, config: SearchConfig, offset: np.ndarray | None = None,
                 negate: bool = False) -> tuple[float, float]:
    """Maximize +/- lambda_max(Re(e^{-i theta} T) + offset) over theta."""
    sign = -1.0 if negate else 1.0
    R, K = real_part(T), imag_part(T)
    extra = 0.0 if offset is None else offset

    def batch(thetas):
        c = np.cos(thetas)[:, None, None]
        s = np.sin(thetas)[:, None, None]
        return sign * _lmax(c * R + s * K + extra)

    def scalar(theta):
        return float(sign * _lmax(math.cos(theta) * R + math.sin(theta) * K + extra))

    return maximize_periodic(batch, scalar, config.theta_points, config.bracket_width,
                             config.refine_brackets)


def num_radius(T, config: SearchConfig = DEFAULT) -> tuple[float, Witness]:
    """w(T) = max_theta h(theta), refined by golden section; witness is the optimal eigenvector.

    The returned value is ``max(h(theta*), |<Tx,x>|)``; both are lower
    estimates of w(T) and the second is never smaller.
    """
    T = as_square(T)
    theta, h = _max_support(T, config)
    _, V = np.linalg.eigh(_rotation(T, theta))
    x = V[:, -1]
    q = qf_modulus(T, x)
    return max(h, q), _witness(x, q)


def w(T, config: SearchConfig = DEFAULT) -> float:
    return num_radius(T, config)[0]


def _crawford_search(T: np.ndarray, config: SearchConfig) -> tuple[float, Witness]:
    theta, g = _max_support(T, config, negate=True)
    if g > 0.0:
        _, V = np.linalg.eigh(_rotation(T, theta))
        x = V[:, -1]
        return g, _witness(x, qf_modulus(T, x))
    return 0.0, _zero_witness(T, config)


def crawford(T, config: SearchConfig = DEFAULT) -> float:
    """Distance from the origin to W(T): max(0, max_theta -h(theta)).

    Relies on W(T) being convex; no direct sphere minimization is done.
    """
    return max(0.0, _max_support(as_square(T), config, negate=True)[1])


def _zero_witness(T: np.ndarray, config: SearchConfig) -> Witness:
    """A unit vector with <Tx, x> close to 0 when 0 lies in W(T)."""
    n = T.shape[0]
    rng = np.random.default_rng(config.seed)
    X0 = random_unit_vectors(rng, 8, n)
    scale = max(1.0, float(np.linalg.norm(T)) ** 2)

    def f(X):
        return -np.abs(quad_form(T, X)) ** 2

    def grad(X):
        q = quad_form(T, X)
        return -2.0 * (q.conj()[:, None] * (X @ T.T) + q[:, None] * (X @ T.conj()))

    X, fx, _ = projected_ascent(f, grad, X0, step0=0.25 / scale, max_iter=config.max_iter,
                                grad_tol=config.grad_tol)
    x = X[int(np.argmax(fx))]
    return _witness(x, qf_modulus(T, x))


def crawford_psd(H) -> float:
    """c(H) for positive semidefinite H, i.e. its smallest eigenvalue (clamped at 0)."""
    lam = hermitian_eig(H).eigenvalues
    return float(max(lam[0], 0.0))


# ---------------------------------------------------------------- Davis-Wielandt radius


def _shell_sweep(T: np.ndarray, M: np.ndarray,
                 config: SearchConfig) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Top eigenvalues of cos(phi) Re(e^{-i theta} T) + sin(phi) T*T on the (theta, phi) grid."""
    thetas = periodic_grid(config.sweep_theta)
    phis = np.linspace(0.0, math.pi / 2.0, config.sweep_phi)
    cphi = np.cos(phis)[None, :, None, None]
    sM = np.sin(phis)[None, :, None, None] * M
    n = T.shape[0]
    chunk = max(1, int(2_000_000 // (len(phis) * n * n)))
    S = np.empty((len(thetas), len(phis)))
    for start in range(0, len(thetas), chunk):
        rot = _rotations(T, thetas[start:start + chunk])
        S[start:start + chunk] = _lmax(cphi * rot[:, None] + sM)
    return S, thetas, phis


def _sweep_peaks(S: np.ndarray, k: int) -> list[tuple[int, int]]:
    """Grid local maxima (theta periodic, phi clamped), best first, ties to smaller theta then phi."""
    padded = np.pad(S, ((0, 0), (1, 1)), mode="edge")
    is_peak = np.ones_like(S, dtype=bool)
    for dj in (-1, 0, 1):
        shifted = np.roll(padded, dj, axis=0)
        for dk in (-1, 0, 1):
            if dj == 0 and dk == 0:
                continue
            is_peak &= S >= shifted[:, 1 + dk: 1 + dk + S.shape[1]]
    flat = np.flatnonzero(is_peak.ravel())
    if flat.size == 0:
        flat = np.array([int(np.argmax(S))])
    order = np.argsort(-S.ravel()[flat], kind="stable")
    return [divmod(int(i), S.shape[1]) for i in flat[order[:k]]]


def _sweep_candidates(T: np.ndarray, M: np.ndarray, config: SearchConfig,
                      rng: np.random.Generator) -> np.ndarray:
    S, thetas, phis = _shell_sweep(T, M, config)
    peaks = _sweep_peaks(S, config.sweep_candidates)
    A = np.array([math.cos(phis[k]) * _rotation(T, thetas[j]) + math.sin(phis[k]) * M
                  for j, k in peaks])
    lam, V = np.linalg.eigh(A)
    out = []
    for a in range(len(peaks)):
        top = V[a, :, -1]
        if T.shape[0] > 1 and lam[a, -1] - lam[a, -2] < config.degenerate_gap:
            # degenerate top eigenspace: keep the best of a few random combinations
            mult = int(np.sum(lam[a, -1] - lam[a] < config.degenerate_gap))
            basis = V[a, :, -mult:]
            C = random_unit_vectors(rng, config.degenerate_samples, mult)
            trials = np.vstack([top[None, :], C @ basis.T])
            top = trials[int(np.argmax(dw_objective(T, M, trials)))]
        out.append(top)
    return np.array(out)


def dw_radius(T, config: SearchConfig = DEFAULT, return_meta: bool = False):
    """Best found value of sqrt(|<Tx,x>|^2 + ||Tx||^4) over unit vectors.

    Two searches are combined: a shell sweep whose grid peaks are polished by
    a monotone fixed-point ascent, and multi-start projected gradient ascent
    from random points.  The result is a lower estimate of dw(T) that is exact
    up to solver tolerance whenever the sweep brackets the global peak.
    """
    T = as_square(T)
    n = T.shape[0]
    M = gram(T)
    rng = np.random.default_rng(config.seed)

    cand = _sweep_candidates(T, M, config, rng)
    Xs, fs = linearized_polish(T, M, cand, config.polish_iter)

    scale = float(np.linalg.eigvalsh(M)[-1])
    step0 = 0.25 / max(scale + scale ** 2, 1e-300)
    X0 = random_unit_vectors(rng, config.restarts, n)

    def f(X):
        return dw_objective(T, M, X)

    def grad(X):
        return dw_gradient(T, M, X)

    Xr, fr, iters = projected_ascent(f, grad, X0, step0=step0, max_iter=config.max_iter,
                                     grad_tol=config.grad_tol)

    X = np.vstack([Xs, Xr])
    fx = np.concatenate([fs, fr])
    best = int(np.argmax(fx))
    Xb, fb = linearized_polish(T, M, X[best:best + 1], config.polish_iter)
    x = Xb[0]
    value = math.sqrt(max(float(dw_objective(T, M, x[None, :])[0]), 0.0))
    witness = _witness(x, value)
    if return_meta:
        meta = {
            "sweep_grid": (config.sweep_theta, config.sweep_phi),
            "sweep_candidates": len(cand),
            "restarts": config.restarts,
            "ascent_iterations": iters,
            "winner": "sweep" if best < len(cand) else "restart",
            "seed": config.seed,
        }
        return value, witness, meta
    return value, witness


def dw_estimate(T, config: SearchConfig = DEFAULT) -> float:
    return dw_radius(T, config)[0]


# ---------------------------------------------------------------- suprema over theta


def sup_theta_w(T, sign: int = 1, config: SearchConfig = DEFAULT) -> float:
    """sup_theta w(e^{i theta} T + sign * T*T).

    Writing w(X) = max_phi lambda_max(Re(e^{-i phi} X)) turns the double
    supremum into max over (psi, t) of lambda_max(Re(e^{-i psi} T) + t T*T)
    with t in [-1, 1].  That is convex in t and increasing because T*T >= 0,
    so t = 1 is optimal for either sign and a single angular search suffices.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    T = as_square(T)
    return _max_support(T, config, offset=gram(T))[1]


def _wc_grid(T: np.ndarray, M: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Grid estimates of w(e^{i theta}T + M) and c(e^{i theta}T - M) for theta on an n-point grid.

    Uses Re(e^{-i phi}(e^{i theta} T +/- M)) = Re(e^{-i (phi - theta)} T) +/- cos(phi) M,
    so one table E[j, k] = lambda_max(Re(e^{-i psi_j} T) + cos(phi_k) M) serves both.
    """
    grid = periodic_grid(n)
    rot = _rotations(T, grid)
    half = n // 2 + 1
    cosines = np.cos(grid[:half])
    E = _lmax(rot[:, None] + cosines[None, :, None, None] * M)  # (n, half)

    j = np.arange(n)
    w_est = np.empty(n)
    c_est = np.empty(n)
    for a in range(n):
        psi = (j - a) % n  # psi = phi - theta
        kpos = np.minimum(j, n - j)  # cos(phi_j) = cos(phi_{n-j})
        w_est[a] = np.max(E[psi, kpos])
        shifted = (j + n // 2) % n  # cos(phi + pi) = -cos(phi)
        kneg = np.minimum(shifted, n - shifted)
        c_est[a] = max(0.0, np.max(-E[psi, kneg]))
    return w_est, c_est


def sup_theta_wc(T, config: SearchConfig = DEFAULT, grid: int = 128,
                 inner: SearchConfig | None = None) -> float:
    """sup_theta [w^2(e^{i theta}T + T*T) + c^2(e^{i theta}T - T*T)].

    A joint (theta, phi) table locates the best outer angle, which is then
    refined by golden section with accurate inner searches.  Every evaluated
    term underestimates the true value, so the result is a valid lower estimate.
    """
    T = as_square(T)
    M = gram(T)
    inner = inner or SearchConfig(theta_points=256, bracket_width=1e-8, refine_brackets=1,
                                  seed=config.seed)
    w_est, c_est = _wc_grid(T, M, grid)
    values = w_est ** 2 + c_est ** 2

    def exact(theta):
        X = np.exp(1j * theta) * T
        return w(X + M, inner) ** 2 + crawford(X - M, inner) ** 2

    step = 2.0 * math.pi / grid
    thetas = periodic_grid(grid)
    best = max(exact(thetas[int(np.argmax(values))]), float(np.max(values)))
    for j in local_maxima_periodic(values, 2):
        _, v = golden_section_max(exact, thetas[j] - step, thetas[j] + step, tol=1e-7)
        best = max(best, v)
    return best


# ---------------------------------------------------------------- bundle


def nr_profile(T, config: SearchConfig = DEFAULT) -> NRProfile:
    T = as_square(T)
    sv = singular_values(T)
    w_norm, w_min = _norm_witnesses(T)
    wv, w_wit = num_radius(T, config)
    cv, c_wit = _crawford_search(T, config)
    dv, d_wit, meta = dw_radius(T, config, return_meta=True)
    meta = dict(meta, theta_points=config.theta_points, bracket_width=config.bracket_width)
    return NRProfile(
        op_norm=float(sv[0]),
        min_modulus=float(sv[-1]),
        num_radius=wv,
        crawford=cv,
        dw_estimate=dv,
        witnesses={"op_norm": w_norm, "min_modulus": w_min, "num_radius": w_wit,
                   "crawford": c_wit, "dw": d_wit},
        solver_meta=meta,
    )
