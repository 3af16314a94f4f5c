"""Acceptance criteria, one test each; every test also records a PASS/FAIL summary line."""

import math
import time

import numpy as np
from conftest import ACCEPTANCE_LINES, fd_gradient_error

from dwradius import bounds
from dwradius.blocks import (
    antidiag_spec,
    assemble,
    cubic_theta,
    dw_antidiag_lower,
    dw_antidiag_upper_abs,
    dw_antidiag_upper_norm,
    dw_antidiag_upper_piecewise,
    dw_I_B_exact,
    dw_nilpotent_exact,
    dw_triangular_upper_34,
    dw_triangular_upper_35,
    nilpotent_spec,
    shift_bounds,
    upper_left_spec,
)
from dwradius.builtins import builtin_matrix
from dwradius.cli import _oracle_report
from dwradius.config import DEFAULT
from dwradius.properties import check_normaloid, random_complex, random_normal, run_suite
from dwradius.quantities import dw_radius
from dwradius.report import comparison_table


def record(number: int, title: str, failures: list[str], extra: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if extra:
        line += f" ({extra})"
    if failures:
        line += " :: " + "; ".join(failures)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def check(failures: list[str], label: str, got: float, expected: float, tol: float) -> None:
    if not abs(got - expected) <= tol:
        failures.append(f"{label} = {got:.6g}, expected {expected} +/- {tol}")


def test_criterion_1_comparison_table():
    start = time.perf_counter()
    table = comparison_table()
    elapsed = time.perf_counter() - start
    failures = [f"{c.row}/{c.matrix} = {c.computed:.6g} vs {c.expected}" for c in table.mismatches]
    if len(table.cells) != 20:
        failures.append(f"{len(table.cells)} cells instead of 20")
    if elapsed >= 10.0:
        failures.append(f"runtime {elapsed:.1f} s")
    worst = max(c.error for c in table.cells)
    record(1, "comparison table, 20 cells within 5e-3", failures,
           f"max error {worst:.2e}, {elapsed:.2f} s")


def test_criterion_2_reference_values():
    f: list[str] = []

    def ids(name):
        return {b.id: b for b in bounds.full_catalog(builtin_matrix(name))}

    d12, d11, t3, t2 = ids("diag-1-2"), ids("diag1-1"), ids("t3"), ids("t2")
    check(f, "diag(-1,-2) thm2.6^2", d12["thm2.6"].squared, 34, 5e-3)
    check(f, "diag(-1,-2) zs2.1^2", d12["zs2.1"].squared, 52, 5e-3)
    check(f, "diag(1,-1) thm2.8upper^2", d11["thm2.8upper"].squared, 4, 5e-3)
    check(f, "diag(1,-1) thm2.8lower^2", d11["thm2.8lower"].squared, 2, 5e-3)
    sextet = zip(("zs2.1", "zs2.7", "zs2.13", "zs2.14", "zs2.16", "zs2.17"),
                 (6.283, 35.416, 6.828, 6.828, 6.325, 6.58))
    for bid, expected in sextet:
        check(f, f"T3 {bid}^2", t3[bid].squared, expected, 5e-3)
    check(f, "T3 thm2.16i^2", t3["thm2.16i"].squared, 6, 5e-3)
    check(f, "T3 thm2.16ii^2", t3["thm2.16ii"].squared, 5.6, 5e-3)
    check(f, "T2 thm2.19", t2["thm2.19"].value, 4.123, 5e-3)
    for bid, expected in (("zs2.1", 5.0935), ("zs2.2", 4.2426), ("zs2.17", 4.6006)):
        check(f, f"T2 {bid}", t2[bid].value, expected, 5e-3)
    record(2, "reference values (18 numbers, tol 5e-3)", f)


def test_criterion_3_exact_block_formulas():
    f: list[str] = []
    ct = cubic_theta(2.0)
    for name, expected in (("p", -0.75), ("q", -1.5), ("r", -0.75), ("s", 0.15625),
                           ("alpha", -1.15625)):
        check(f, f"cubic {name}", getattr(ct, name), expected, 1e-3)
    check(f, "theta0", ct.theta0, 1.0657, 2e-3)

    B = np.array([[0, 2], [0, 0]], dtype=complex)
    exact = dw_I_B_exact(B)
    check(f, "dw([[I,B],[0,0]])", exact, 5.107, 2e-3)
    check(f, "upper-left exact vs assembled", exact, dw_radius(assemble(upper_left_spec(B)))[0], 1e-4)

    for B, expected in ((np.array([[0, 1], [0, 1]]), 2.0), (np.array([[0.3, 0.4], [0, 0.5]]), 0.452)):
        B = B.astype(complex)
        exact = dw_nilpotent_exact(B)
        check(f, f"nilpotent ||B||={np.linalg.norm(B, 2):.3f}", exact, expected, 2e-3)
        check(f, "nilpotent exact vs assembled", exact, dw_radius(assemble(nilpotent_spec(B)))[0], 1e-4)
    record(3, "exact block formulas and cubic scalars", f)


def test_criterion_4_block_reference_values():
    f: list[str] = []
    I2 = np.eye(2, dtype=complex)
    one, zero = np.ones((1, 1)), np.zeros((1, 1))
    check(f, "antidiag lower", dw_antidiag_lower(np.diag([1, 0]), np.diag([1j, 0])), math.sqrt(6) / 2, 5e-3)
    check(f, "piecewise upper A=B=I", dw_antidiag_upper_piecewise(I2, I2), 2.0, 5e-3)
    check(f, "abs upper^2", dw_antidiag_upper_abs(np.diag([1, 0]), np.diag([0, 1j])) ** 2, 1.5, 5e-3)
    check(f, "norm-conditioned upper^2 (2I, I)", dw_antidiag_upper_norm(2 * I2, I2)[0] ** 2, 16.0, 5e-3)
    check(f, "abs upper^2 (2I, I)", dw_antidiag_upper_abs(2 * I2, I2) ** 2, 18.5, 5e-3)
    check(f, "triangular norms bound^2", dw_triangular_upper_35(one, one, one) ** 2, 9.104, 5e-3)
    check(f, "triangular norms bound", dw_triangular_upper_35(one, one, zero), 3.017, 5e-3)
    check(f, "triangular split bound", dw_triangular_upper_34(one, one, zero), 3.414, 5e-3)
    # the bounds must also hold against the assembled matrices
    est = dw_radius(assemble(antidiag_spec(2 * I2, I2)))[0]
    if dw_antidiag_upper_norm(2 * I2, I2)[0] < est - 1e-6:
        f.append("norm-conditioned bound below the assembled estimate")
    record(4, "block reference values (tol 5e-3)", f)


def test_criterion_5_property_suites():
    start = time.perf_counter()
    f: list[str] = []
    suite = run_suite(1000, [2, 3, 4, 5, 6], seed=2024, config=DEFAULT)
    if suite.violations:
        f.append(f"{len(suite.violations)} suite violations, first {suite.violations[0]}")

    oracle = _oracle_report(50, 99, DEFAULT)
    if oracle.violations:
        f.append(f"{len(oracle.violations)} oracle disagreements beyond 1e-5")

    rng = np.random.default_rng(31)
    normal_bad = 0
    for k in range(50):
        T = random_normal(rng, 2 + k % 5)
        normal_bad += len(check_normaloid(T, DEFAULT, tol=1e-5).violations)
    if normal_bad:
        f.append(f"{normal_bad} normaloid failures")

    for n in range(2, 13):
        lo, up, est = shift_bounds(n)
        if not lo - 1e-9 <= est <= up + 1e-9:
            f.append(f"shift n={n}: {lo:.6f} <= {est:.6f} <= {up:.6f} fails")
    elapsed = time.perf_counter() - start
    if elapsed >= 300.0:
        f.append(f"runtime {elapsed:.0f} s")
    worst = min(suite.worst.values())
    record(5, "property suites, oracle, normaloid and shift brackets", f,
           f"{suite.checks + oracle.checks} checks, worst margin {worst:.2e}, {elapsed:.0f} s")


def test_criterion_6_gradient_check():
    rng = np.random.default_rng(6)
    errors = []
    for k in range(1000):
        n = 1 + k % 6
        T = random_complex(rng, n)
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        errors.append(fd_gradient_error(T, x / np.linalg.norm(x)))
    worst = max(errors)
    f = [] if worst <= 1e-4 else [f"worst relative error {worst:.2e}"]
    record(6, "analytic gradient vs central differences on 1000 points", f, f"worst {worst:.2e}")
