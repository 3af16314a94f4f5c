"""Catalog of lower and upper bounds on the Davis-Wielandt radius.

Every bound is reported on the dw scale; bounds stated for dw^2 are square
rooted.  Identifiers (``thm2.4i``, ``zs2.13`` and so on) are stable keys used
by the report and the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .config import DEFAULT, SearchConfig
from .errors import BadExponent, DimensionMismatch
from .linalg import as_square, gram, hermitian_eig, herm_power, hermitian_norm, imag_part, real_part
from .quantities import (
    crawford,
    crawford_psd,
    dw_radius,
    min_modulus,
    op_norm,
    sup_theta_w,
    sup_theta_wc,
    w,
)
from .search import periodic_grid
from .sphere import projected_ascent, quad_form, random_unit_vectors

LOWER, UPPER, ESTIMATE = "lower", "upper", "estimate"


@dataclass(frozen=True)
class BoundResult:
    id: str
    kind: str
    value: float
    citation: str
    detail: dict = field(default_factory=dict)

    @property
    def squared(self) -> float:
        return self.value ** 2


@dataclass(frozen=True)
class EqualityDiagnostics:
    dw_eq_w: bool
    dw_eq_norm_sq: bool
    dw_eq_norm_sq_consistent: bool
    norm_witness_crawford_value: float


def _root(x: float) -> float:
    return math.sqrt(max(float(x), 0.0))


def _cotranspose_gram(T: np.ndarray) -> np.ndarray:
    """T T* = |T*|^2, symmetrized."""
    N = T @ T.conj().T
    return 0.5 * (N + N.conj().T)


# ---------------------------------------------------------------- classic and lower bounds


def classic_bounds(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    T = as_square(T)
    wv, nrm = w(T, config), op_norm(T)
    return [
        BoundResult("classic.lower", LOWER, max(wv, nrm ** 2), "max{w(T), ||T||^2} <= dw(T)"),
        BoundResult("classic.upper", UPPER, _root(wv ** 2 + nrm ** 4),
                    "dw(T) <= sqrt(w^2(T) + ||T||^4)"),
    ]


def lower_thm24(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    """Lower bounds that mix the Crawford numbers of T and T*T."""
    T = as_square(T)
    wv, nrm = w(T, config), op_norm(T)
    c, cM = crawford(T, config), crawford_psd(gram(T))
    detail = {"w": wv, "norm": nrm, "c": c, "c_gram": cM}
    part_i = _root(max(wv ** 2 + cM ** 2, nrm ** 4 + c ** 2))
    part_ii = _root(2.0 * max(wv * cM, c * nrm ** 2))
    return [
        BoundResult("thm2.4i", LOWER, part_i,
                    "dw^2 >= max{w^2(T) + c^2(T*T), ||T||^4 + c^2(T)}", detail),
        BoundResult("thm2.4ii", LOWER, part_ii,
                    "dw^2 >= 2 max{w(T) c(T*T), c(T) ||T||^2}", detail),
    ]


# ---------------------------------------------------------------- angular suprema


def upper_thm26(T, config: SearchConfig = DEFAULT) -> BoundResult:
    T = as_square(T)
    sup_w = sup_theta_w(T, +1, config)
    c, m = crawford(T, config), min_modulus(T)
    value = _root(sup_w ** 2 - 2.0 * c * m ** 2)
    return BoundResult("thm2.6", UPPER, value,
                       "dw^2 <= sup_theta w^2(e^{i theta}T + T*T) - 2 c(T) m^2(T)",
                       {"sup_w": sup_w, "c": c, "m": m})


def bounds_thm28(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    T = as_square(T)
    M = gram(T)
    sup_wc = sup_theta_wc(T, config)
    w_plus, w_minus = w(T + M, config), w(T - M, config)
    return [
        BoundResult("thm2.8lower", LOWER, _root(0.5 * sup_wc),
                    "dw^2 >= sup_theta [w^2(e^{i theta}T + T*T) + c^2(e^{i theta}T - T*T)] / 2",
                    {"sup_wc": sup_wc}),
        BoundResult("thm2.8upper", UPPER, _root(0.5 * (w_plus ** 2 + w_minus ** 2)),
                    "dw^2 <= [w^2(T + T*T) + w^2(T - T*T)] / 2",
                    {"w_plus": w_plus, "w_minus": w_minus}),
    ]


# ---------------------------------------------------------------- functional calculus


def _conjugate(a: float) -> float:
    if not a > 1.0:
        raise BadExponent(f"exponent must exceed 1, got {a}")
    return a / (a - 1.0)


def upper_thm212_power(T, s: float = 0.5, alpha1: float = 2.0, alpha2: float = 2.0) -> BoundResult:
    """Mixed Schwarz bound with f(t) = t^s, g(t) = t^(1-s) for both factor pairs."""
    if not 0.0 < s < 1.0:
        raise BadExponent(f"s must lie in (0, 1), got {s}")
    beta1, beta2 = _conjugate(alpha1), _conjugate(alpha2)
    T = as_square(T)
    M, N = gram(T), _cotranspose_gram(T)
    # |T|^p = M^(p/2), |T*|^p = N^(p/2), |T*T|^p = M^p
    S = (herm_power(M, s * alpha1) / alpha1
         + herm_power(N, (1.0 - s) * beta1) / beta1
         + herm_power(M, 2.0 * s * alpha2) / alpha2
         + herm_power(M, 2.0 * (1.0 - s) * beta2) / beta2)
    return BoundResult("thm2.12", UPPER, _root(hermitian_norm(S)),
                       "dw^2 <= ||f1^{2a1}(|T|)/a1 + g1^{2b1}(|T*|)/b1 + f2^{2a2}(|T*T|)/a2"
                       " + g2^{2b2}(|T*T|)/b2||, power family",
                       {"s": s, "alpha1": alpha1, "alpha2": alpha2, "beta1": beta1, "beta2": beta2})


def upper_cor213(T, alpha: float = 2.0) -> list[BoundResult]:
    beta = _conjugate(alpha)
    T = as_square(T)
    M, N = gram(T), _cotranspose_gram(T)
    S1 = (herm_power(M, alpha / 2.0) + herm_power(M, alpha)) / alpha \
        + (herm_power(N, beta / 2.0) + herm_power(M, beta)) / beta
    S2 = 0.5 * (M + N + 2.0 * M @ M)
    return [
        BoundResult("cor2.13i", UPPER, _root(hermitian_norm(S1)),
                    "dw^2 <= || |T|^a (1 + |T|^a)/a + (|T*|^b + |T|^{2b})/b ||",
                    {"alpha": alpha, "beta": beta}),
        BoundResult("cor2.13ii", UPPER, _root(hermitian_norm(S2)),
                    "dw^2 <= || |T|^2 + |T*|^2 + 2|T|^4 || / 2"),
    ]


def upper_thm216(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    T = as_square(T)
    M = gram(T)
    nrm = op_norm(T)
    wT2 = w(T @ T, config)
    return [
        BoundResult("thm2.16i", UPPER, _root(hermitian_norm(M + M @ M)),
                    "dw^2 <= || |T|^2 + |T|^4 ||"),
        BoundResult("thm2.16ii", UPPER, _root(0.5 * (wT2 + nrm ** 2) + nrm ** 4),
                    "dw^2 <= (w(T^2) + ||T||^2)/2 + ||T||^4", {"w_T2": wT2}),
    ]


# ---------------------------------------------------------------- infimum over a shift


class _ShiftObjective:
    """Objective of the shifted bound as a function of lambda = (re, im).

    ``w(T - lambda I)`` is read off a fixed support-function grid, where it
    equals max_theta [h(theta) - Re(e^{-i theta} lambda)].
    """

    def __init__(self, T: np.ndarray, config: SearchConfig):
        self.T = T
        self.M = gram(T)
        self.R, self.K = real_part(T), imag_part(T)
        self.thetas = periodic_grid(config.theta_points)
        c, s = np.cos(self.thetas), np.sin(self.thetas)
        self.cos, self.sin = c, s
        self.h = np.linalg.eigvalsh(c[:, None, None] * self.R + s[:, None, None] * self.K)[:, -1]

    def _head(self, lr: float, li: float) -> float:
        Rl = lr * self.R + li * self.K  # Re(conj(lambda) T)
        a = hermitian_norm(Rl)
        return (2.0 * a + hermitian_norm(self.M - 2.0 * Rl)) ** 2 + 2.0 * a - (lr * lr + li * li)

    def grid_value(self, v) -> float:
        lr, li = float(v[0]), float(v[1])
        w_shift = float(np.max(self.h - (self.cos * lr + self.sin * li)))
        return self._head(lr, li) + w_shift ** 2

    def exact_value(self, v, config: SearchConfig) -> float:
        lr, li = float(v[0]), float(v[1])
        lam = complex(lr, li)
        w_shift = w(self.T - lam * np.eye(self.T.shape[0]), config)
        return self._head(lr, li) + w_shift ** 2


def upper_thm219(T, config: SearchConfig = DEFAULT, grid: int = 41) -> BoundResult:
    """Infimum over complex shifts lambda; lambda = 0 gives the classic upper bound."""
    T = as_square(T)
    nrm = op_norm(T)
    obj = _ShiftObjective(T, config)
    radius = 2.0 * nrm
    best_v, best_f = np.zeros(2), obj.grid_value((0.0, 0.0))
    if radius > 0.0:
        axis = np.linspace(-radius, radius, grid)
        for lr in axis:
            for li in axis:
                if lr * lr + li * li > radius * radius:
                    continue
                f = obj.grid_value((lr, li))
                if f < best_f:
                    best_v, best_f = np.array([lr, li]), f
        res = minimize(obj.grid_value, best_v, method="Nelder-Mead",
                       options={"maxiter": 200, "xatol": 1e-10, "fatol": 1e-10})
        if res.fun < best_f:
            best_v = np.asarray(res.x, dtype=float)
    at_zero = obj.exact_value((0.0, 0.0), config)
    at_best = obj.exact_value(best_v, config)
    if at_best < at_zero:
        value, lam = at_best, complex(best_v[0], best_v[1])
    else:
        value, lam = at_zero, 0j
    return BoundResult("thm2.19", UPPER, _root(value),
                       "dw^2 <= inf_lambda {(2||Re(conj(lambda)T)|| + ||T*T - 2Re(conj(lambda)T)||)^2"
                       " + 2||Re(conj(lambda)T)|| - |lambda|^2 + w^2(T - lambda I)}",
                       {"lambda_re": lam.real, "lambda_im": lam.imag, "at_zero": _root(at_zero)})


# ---------------------------------------------------------------- subadditivity


def subadditivity_check(S, T, config: SearchConfig = DEFAULT) -> tuple[float, float]:
    """(dw(S+T), dw(S) + dw(T) + w(S*T + T*S)) as estimated by the sphere search."""
    S, T = as_square(S), as_square(T)
    if S.shape != T.shape:
        raise DimensionMismatch(f"shapes differ: {S.shape} vs {T.shape}")
    cross = S.conj().T @ T + T.conj().T @ S
    wc = hermitian_norm(cross)  # cross is Hermitian, so w = spectral radius
    if wc <= 1e-10:
        wc = 0.0
    lhs = dw_radius(S + T, config)[0]
    rhs = dw_radius(S, config)[0] + dw_radius(T, config)[0] + wc
    return lhs, rhs


# ---------------------------------------------------------------- reference bounds


def norm_gap_inf(T, config: SearchConfig = DEFAULT) -> tuple[float, np.ndarray]:
    """inf over unit x of (||Tx|| - ||T*x||)^2 with a minimizer.

    The zero sets of (||Tx|| - ||T*x||)^2 and <(T*T - TT*)x, x>^2 coincide,
    so the smooth second form is minimized from random starts plus a seed
    built from the extreme eigenvectors of the (traceless) commutator.
    """
    T = as_square(T)
    n = T.shape[0]
    M, N = gram(T), _cotranspose_gram(T)
    D = M - N
    rng = np.random.default_rng(config.seed)
    scale = hermitian_norm(D)
    if scale <= 1e-14 * max(1.0, hermitian_norm(M)):
        x = np.zeros(n, dtype=np.complex128)
        x[0] = 1.0
        return 0.0, x

    eig = hermitian_eig(D)
    lo, hi = eig.eigenvalues[0], eig.eigenvalues[-1]
    u, v = eig.eigenvectors[:, 0], eig.eigenvectors[:, -1]
    if hi - lo > 0.0 and lo < 0.0 < hi:
        t = math.atan(math.sqrt(-lo / hi))
        seed = math.cos(t) * u + math.sin(t) * v
    else:
        seed = u
    X0 = np.vstack([seed[None, :], random_unit_vectors(rng, config.restarts, n)])

    def f(X):
        return -quad_form(D, X).real ** 2

    def grad(X):
        d = quad_form(D, X).real
        return -4.0 * d[:, None] * (X @ D.T)

    X, _, _ = projected_ascent(f, grad, X0, step0=0.25 / scale ** 2, max_iter=config.max_iter,
                               grad_tol=config.grad_tol)
    gaps = (np.sqrt(np.maximum(quad_form(M, X).real, 0.0))
            - np.sqrt(np.maximum(quad_form(N, X).real, 0.0))) ** 2
    k = int(np.argmin(gaps))
    return float(gaps[k]), X[k]


def zs_reference_bounds(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    """Seven earlier upper bounds used for comparison."""
    T = as_square(T)
    M, N = gram(T), _cotranspose_gram(T)
    M2 = M @ M
    nrm, wv, c = op_norm(T), w(T, config), crawford(T, config)
    wM = hermitian_norm(M)
    wMT = w(M @ T, config)
    inf_gap, _ = norm_gap_inf(T, config)

    z1 = w(M - T, config) ** 2 + 2.0 * nrm ** 2 * wv
    z2 = 0.5 * hermitian_norm(M + 2.0 * M2 + N) - 0.5 * inf_gap
    z7 = (0.5 * w(T @ T, config) + 0.25 * hermitian_norm(M + N)
          + 4.0 * wv ** 2 * (2.0 * wv ** 2 - c ** 2 + 2.0 * wv * _root(wv ** 2 - c ** 2)))
    z13 = max(nrm ** 2, nrm ** 4) + math.sqrt(2.0) * wMT
    z14 = 0.5 * (hermitian_norm(M2 + M) + hermitian_norm(M2 - M)) + math.sqrt(2.0) * wMT
    z16 = max(wv, wM) * _root(hermitian_norm(M2 + M) + 2.0 * wMT)
    z17 = nrm * max(wv, wM) * _root(1.0 + nrm ** 2 + 2.0 * wv)

    rows = [
        ("zs2.1", z1, "dw^2 <= w^2(|T|^2 - T) + 2||T||^2 w(T)", {}),
        ("zs2.2", z2, "dw^2 <= w(|T|^2 + 2|T|^4 + |T*|^2)/2 - inf (||Tx|| - ||T*x||)^2 / 2",
         {"inf": inf_gap}),
        ("zs2.7", z7, "dw^2 <= w(T^2)/2 + w(|T|^2 + |T*|^2)/4"
         " + 4w^2(T)(2w^2(T) - c^2(T) + 2w(T) sqrt(w^2(T) - c^2(T)))", {}),
        ("zs2.13", z13, "dw^2 <= max{||T||^2, ||T||^4} + sqrt(2) w(|T|^2 T)", {}),
        ("zs2.14", z14, "dw^2 <= [w(|T|^4 + |T|^2) + w(|T|^4 - |T|^2)]/2 + sqrt(2) w(|T|^2 T)", {}),
        ("zs2.16", z16, "dw^2 <= max{w(T), w(|T|^2)} (w(|T|^4 + |T|^2) + 2w(|T|^2 T))^{1/2}", {}),
        ("zs2.17", z17, "dw^2 <= ||T|| max{w(T), w(|T|^2)} (1 + ||T||^2 + 2w(T))^{1/2}", {}),
    ]
    return [BoundResult(i, UPPER, _root(v), cite, dict(d, squared=v)) for i, v, cite, d in rows]


# ---------------------------------------------------------------- equality diagnostics


def equality_diagnostics(T, config: SearchConfig = DEFAULT, gap_tol: float = 1e-9,
                         tol: float = 1e-8) -> EqualityDiagnostics:
    """Checks tied to the equality cases dw = w and dw = ||T||^2.

    ``norm_witness_crawford_value`` is max |<Tx, x>| over unit x in the top
    right-singular subspace, i.e. over the norm-attaining vectors.
    """
    T = as_square(T)
    eig = hermitian_eig(gram(T))
    lam = eig.eigenvalues
    nrm = math.sqrt(max(lam[-1], 0.0))
    top = lam >= lam[-1] - gap_tol * max(1.0, lam[-1])
    V = eig.eigenvectors[:, top]
    value = w(V.conj().T @ T @ V, config)
    dw = dw_radius(T, config)[0]
    eq_sq = abs(dw - nrm ** 2) <= 1e-6 * max(1.0, nrm ** 2)
    return EqualityDiagnostics(
        dw_eq_w=nrm <= 1e-12,
        dw_eq_norm_sq=eq_sq,
        dw_eq_norm_sq_consistent=(not eq_sq) or value <= tol,
        norm_witness_crawford_value=value,
    )


# ---------------------------------------------------------------- aggregation


def _sort_key(b: BoundResult) -> tuple:
    if b.kind == LOWER:
        return (0, -b.value, b.id)
    if b.kind == ESTIMATE:
        return (1, 0.0, b.id)
    return (2, b.value, b.id)


def full_catalog(T, config: SearchConfig = DEFAULT) -> list[BoundResult]:
    """Every bound at default parameters (s = 1/2, alpha = 2) plus the dw estimate.

    Order: lower bounds descending, the ``dw.est`` entry, upper bounds ascending.
    """
    T = as_square(T)
    dv, wit, meta = dw_radius(T, config, return_meta=True)
    entries = [
        *classic_bounds(T, config),
        *lower_thm24(T, config),
        upper_thm26(T, config),
        *bounds_thm28(T, config),
        upper_thm212_power(T),
        *upper_cor213(T),
        *upper_thm216(T, config),
        upper_thm219(T, config),
        *zs_reference_bounds(T, config),
        BoundResult("dw.est", ESTIMATE, dv, "best value found by the sphere search",
                    {"winner": meta["winner"]}),
    ]
    return sorted(entries, key=_sort_key)
