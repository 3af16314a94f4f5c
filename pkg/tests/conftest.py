import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

hypothesis.settings.register_profile("default", max_examples=25, deadline=None)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def complex_matrices(min_n=1, max_n=5, bound=3.0):
    """Square complex matrices with bounded real and imaginary parts."""
    part = st.floats(-bound, bound, allow_nan=False, allow_infinity=False, width=64)

    def build(n):
        shape = (n, n)
        return st.tuples(hnp.arrays(np.float64, shape, elements=part),
                         hnp.arrays(np.float64, shape, elements=part)).map(lambda ri: ri[0] + 1j * ri[1])

    return st.integers(min_n, max_n).flatmap(build)


def hermitian_from(T):
    return 0.5 * (T + T.conj().T)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def fd_gradient_error(T, x, h=1e-5):
    """Relative error between the analytic shell gradient and central differences at x.

    The complex gradient G encodes partials as d/dRe(x_j) = Re(G_j), d/dIm(x_j) = Im(G_j).
    """
    from dwradius.sphere import dw_gradient, dw_objective

    M = T.conj().T @ T
    x = x[None, :]
    G = dw_gradient(T, M, x)[0]
    fd = np.empty(x.shape[1], dtype=complex)
    for j in range(x.shape[1]):
        e = np.zeros_like(x)
        e[0, j] = h
        re = (dw_objective(T, M, x + e) - dw_objective(T, M, x - e))[0] / (2 * h)
        im = (dw_objective(T, M, x + 1j * e) - dw_objective(T, M, x - 1j * e))[0] / (2 * h)
        fd[j] = re + 1j * im
    return float(np.linalg.norm(fd - G) / max(np.linalg.norm(G), 1e-12))
