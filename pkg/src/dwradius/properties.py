"""Invariant checks on random matrices, shared by the fuzz command and the test suite.

Each check returns a margin: non-negative means the property holds, and the
most negative margin over a run is the worst violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, SearchConfig
from .linalg import hermitian_norm
from .quantities import crawford, dw_radius, op_norm, w


def random_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    """Matrix with i.i.d. standard complex Gaussian entries."""
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(random_complex(rng, n))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_normal(rng: np.random.Generator, n: int) -> np.ndarray:
    U = random_unitary(rng, n)
    lam = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return (U * lam) @ U.conj().T


@dataclass
class SuiteReport:
    checks: int = 0
    violations: list = field(default_factory=list)
    worst: dict = field(default_factory=dict)

    def record(self, name: str, margin: float, label: str = "") -> None:
        self.checks += 1
        if name not in self.worst or margin < self.worst[name]:
            self.worst[name] = float(margin)
        if margin < 0.0:
            self.violations.append((name, label, float(margin)))

    def merge(self, other: "SuiteReport") -> None:
        self.checks += other.checks
        self.violations.extend(other.violations)
        for k, v in other.worst.items():
            if k not in self.worst or v < self.worst[k]:
                self.worst[k] = v


def check_matrix(T: np.ndarray, rng: np.random.Generator, config: SearchConfig = DEFAULT,
                 label: str = "", dw_value: float | None = None) -> tuple[SuiteReport, float]:
    """Sandwich, scaling, unitary invariance and power inequality for one matrix.

    Returns the report and the dw estimate (so callers can reuse it).
    """
    rep = SuiteReport()
    n = T.shape[0]
    wv, nrm = w(T, config), op_norm(T)
    dv = dw_radius(T, config)[0] if dw_value is None else dw_value

    rep.record("sandwich.lower", dv + 1e-6 - max(wv, nrm ** 2), label)
    rep.record("sandwich.upper", math.sqrt(wv ** 2 + nrm ** 4) + 2e-6 - dv, label)

    alpha = complex(rng.standard_normal(), rng.standard_normal())
    rep.record("scaling", 1e-9 - abs(w(alpha * T, config) - abs(alpha) * wv), label)

    U = random_unitary(rng, n)
    S = U.conj().T @ T @ U
    rep.record("unitary.op_norm", 1e-7 - abs(op_norm(S) - nrm), label)
    rep.record("unitary.num_radius", 1e-7 - abs(w(S, config) - wv), label)
    rep.record("unitary.crawford", 1e-7 - abs(crawford(S, config) - crawford(T, config)), label)
    rep.record("unitary.dw", 1e-7 - abs(dw_radius(S, config)[0] - dv), label)

    T2 = T @ T
    rep.record("power.2", wv ** 2 + 1e-8 - w(T2, config), label)
    rep.record("power.3", wv ** 3 + 1e-8 - w(T2 @ T, config), label)
    return rep, dv


def check_subadditivity(S: np.ndarray, T: np.ndarray, dw_S: float, dw_T: float,
                        config: SearchConfig = DEFAULT, label: str = "") -> SuiteReport:
    rep = SuiteReport()
    cross = hermitian_norm(S.conj().T @ T + T.conj().T @ S)
    lhs = dw_radius(S + T, config)[0]
    rep.record("subadditivity", dw_S + dw_T + cross + 2e-6 - lhs, label)
    return rep


def check_normaloid(T: np.ndarray, config: SearchConfig = DEFAULT, tol: float = 1e-5,
                    label: str = "") -> SuiteReport:
    rep = SuiteReport()
    wv, nrm = w(T, config), op_norm(T)
    rep.record("normaloid", tol - abs(dw_radius(T, config)[0] - math.sqrt(wv ** 2 + nrm ** 4)), label)
    return rep


def run_suite(count: int, dims, seed: int, config: SearchConfig = DEFAULT,
              normal: bool = False) -> SuiteReport:
    """Property suite over ``count`` random matrices.

    Each matrix is also paired with the previous matrix of the same size for
    the subadditivity check, so dw estimates are reused.
    """
    rng = np.random.default_rng(seed)
    dims = list(dims)
    total = SuiteReport()
    last: dict[int, tuple[int, np.ndarray, float]] = {}
    for k in range(count):
        n = dims[k % len(dims)]
        T = random_normal(rng, n) if normal else random_complex(rng, n)
        rep, dv = check_matrix(T, rng, config, label=f"#{k} n={n}")
        total.merge(rep)
        if normal:
            total.merge(check_normaloid(T, config, label=f"#{k} n={n}"))
        if n in last:
            j, S, dS = last[n]
            total.merge(check_subadditivity(S, T, dS, dv, config, label=f"#{j}+#{k}"))
        last[n] = (k, T, dv)
    return total

