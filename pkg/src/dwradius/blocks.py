"""2x2 block operator matrices: assembly, exact Davis-Wielandt radii and bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, SearchConfig
from .errors import BadDimension, DimensionMismatch, LayoutError, NonPositiveNorm, ParseError, ZeroBlock
from .linalg import as_square, gram, hermitian_eig, hermitian_norm
from .matrix_io import matrix_to_json, parse_matrix
from .quantities import dw_radius, op_norm
from .search import golden_section_max

LAYOUT_BLOCKS = {
    "diag": ("A", "B"),           # [[A, 0], [0, B]]
    "antidiag": ("A", "B"),       # [[0, A], [B, 0]]
    "upper_left": ("B",),         # [[I, B], [0, 0]]
    "nilpotent": ("B",),          # [[0, B], [0, 0]]
    "triangular": ("A", "B", "C"),  # [[A, B], [0, C]]
}

ZERO_NORM = 1e-12
INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class BlockSpec:
    layout: str
    blocks: dict

    def __post_init__(self):
        if self.layout not in LAYOUT_BLOCKS:
            raise LayoutError(f"unknown layout {self.layout!r}; expected one of {sorted(LAYOUT_BLOCKS)}")
        need = LAYOUT_BLOCKS[self.layout]
        missing = [k for k in need if k not in self.blocks]
        if missing:
            raise LayoutError(f"layout {self.layout!r} needs blocks {list(need)}, missing {missing}")
        blocks = {k: as_square(self.blocks[k]) for k in need}
        sizes = {k: b.shape[0] for k, b in blocks.items()}
        if len(set(sizes.values())) != 1:
            raise DimensionMismatch(f"blocks must share one size, got {sizes}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return next(iter(self.blocks.values())).shape[0]

    @classmethod
    def from_json(cls, obj) -> "BlockSpec":
        if not isinstance(obj, dict) or "layout" not in obj or not isinstance(obj.get("blocks"), dict):
            raise ParseError('block spec must be an object with "layout" and "blocks"')
        return cls(str(obj["layout"]), {k: parse_matrix(v) for k, v in obj["blocks"].items()})

    def to_json(self) -> dict:
        return {"layout": self.layout, "blocks": {k: matrix_to_json(v) for k, v in self.blocks.items()}}


def _same_size(*mats) -> list[np.ndarray]:
    out = [as_square(m) for m in mats]
    if len({m.shape for m in out}) != 1:
        raise DimensionMismatch(f"blocks must share one size, got {[m.shape for m in out]}")
    return out


def assemble(spec: BlockSpec) -> np.ndarray:
    b = spec.blocks
    n = spec.n
    Z = np.zeros((n, n), dtype=np.complex128)
    if spec.layout == "diag":
        return np.block([[b["A"], Z], [Z, b["B"]]])
    if spec.layout == "antidiag":
        return np.block([[Z, b["A"]], [b["B"], Z]])
    if spec.layout == "upper_left":
        return np.block([[np.eye(n), b["B"]], [Z, Z]])
    if spec.layout == "nilpotent":
        return np.block([[Z, b["B"]], [Z, Z]])
    return np.block([[b["A"], b["B"]], [Z, b["C"]]])


def _dw(T, config: SearchConfig) -> float:
    return dw_radius(T, config)[0]


# ---------------------------------------------------------------- exact values


def dw_diag_exact(A, B, config: SearchConfig = DEFAULT) -> float:
    A, B = _same_size(A, B)
    return max(_dw(A, config), _dw(B, config))


def dw_antidiag_same(B, theta: float = 0.0, config: SearchConfig = DEFAULT) -> float:
    """dw([[0, B], [e^{i theta} B, 0]]), which does not depend on theta."""
    return _dw(as_square(B), config)


@dataclass(frozen=True)
class CubicTheta:
    b: float
    p: float
    q: float
    r: float
    s: float
    alpha: float
    beta: float
    gamma: float
    theta0: float
    source: str  # "closed_form" or "grid"


def ib_profile(theta, b: float):
    """g(theta) = (cos t + b sin t)^2 (cos^2 t + (cos t + b sin t)^2); its max is dw^2 of [[I,B],[0,0]]."""
    c, s = np.cos(theta), np.sin(theta)
    u = c + b * s
    return u * u * (c * c + u * u)


def _grid_argmax(b: float, points: int = 1_000_001) -> float:
    t = np.linspace(0.0, math.pi / 2.0, points)
    return float(t[int(np.argmax(ib_profile(t, b)))])


def cubic_theta(b: float) -> CubicTheta:
    """Closed-form maximizer of g on [0, pi/2] through a depressed cubic (real cube roots)."""
    if not b > 0.0:
        raise NonPositiveNorm(f"b must be positive, got {b}")
    p = -(2.0 * b * b - 5.0) / (2.0 * b)
    q = -(2.0 * b * b - 2.0) / (b * b)
    r = -3.0 / (2.0 * b)
    s = (8 * b ** 8 + 20 * b ** 6 + 45 * b ** 4 + 61 * b ** 2 + 28) / (2 ** 4 * 3 ** 3 * b ** 6)
    alpha = (2.0 * p ** 3 - 9.0 * p * q + 27.0 * r) / 27.0
    if s < 0.0:
        theta0 = _grid_argmax(b)
        return CubicTheta(b, p, q, r, s, alpha, math.nan, math.nan, theta0, "grid")
    root = math.sqrt(s)
    beta = float(np.cbrt(-alpha / 2.0 + root))
    gamma = float(np.cbrt(-alpha / 2.0 - root))
    theta0 = math.atan(beta + gamma - p / 3.0)
    return CubicTheta(b, p, q, r, s, alpha, beta, gamma, theta0, "closed_form")


def _ib_value(theta: float, b: float) -> float:
    c, s = math.cos(theta), math.sin(theta)
    u = c + b * s
    return u * math.sqrt(c * c + u * u)


def dw_I_B_exact(B) -> float:
    """dw([[I, B], [0, 0]]) from the cubic maximizer.

    For very small ||B|| the closed form cancels catastrophically (p/3 is
    huge while tan(theta0) is tiny), so the maximizer is then found by golden
    section on g directly.
    """
    b = op_norm(B)
    if b <= ZERO_NORM:
        return math.sqrt(2.0)
    ct = cubic_theta(b)
    theta = ct.theta0
    if ct.source == "closed_form" and abs(ct.p) / 3.0 > 1e6 * max(abs(math.tan(theta)), 1e-300):
        theta, _ = golden_section_max(lambda t: float(ib_profile(t, b)), 0.0, math.pi / 2.0, 1e-14)
    return _ib_value(theta, b)


def nilpotent_value(b: float) -> float:
    """dw([[0, B], [0, 0]]) as a function of ||B||."""
    if b <= ZERO_NORM:
        return 0.0
    if b < INV_SQRT2:
        return b / (2.0 * math.sqrt(1.0 - b * b))
    return b * b


def dw_nilpotent_exact(B) -> float:
    return nilpotent_value(op_norm(B))


# ---------------------------------------------------------------- anti-diagonal bounds


def dw_antidiag_lower(A, B, config: SearchConfig = DEFAULT) -> float:
    A, B = _same_size(A, B)
    cross = hermitian_norm(A.conj().T @ B + B.conj().T @ A)
    if cross <= 1e-10:
        cross = 0.0
    return 0.5 * (max(_dw(A + B, config), _dw(A - B, config)) - cross)


def dw_antidiag_upper_piecewise(A, B) -> float:
    A, B = _same_size(A, B)
    return nilpotent_value(op_norm(A)) + nilpotent_value(op_norm(B))


def dw_antidiag_upper_abs(A, B) -> float:
    A, B = _same_size(A, B)
    MA, MB = gram(A), gram(B)
    NA = A @ A.conj().T
    NB = B @ B.conj().T
    first = hermitian_norm(MB + NA + 2.0 * MB @ MB)
    second = hermitian_norm(MA + NB + 2.0 * MA @ MA)
    return math.sqrt(0.5 * max(first, second))


def _shared_top_eigvec_residual(A: np.ndarray, B: np.ndarray, a: float, b: float) -> float:
    """min over unit x of ||(A - aI)x|| + ||(B - bI)x||, via the bottom eigenvector of the stacked Gram."""
    I = np.eye(A.shape[0])
    DA, DB = A - a * I, B - b * I
    G = gram(DA) + gram(DB)
    x = hermitian_eig(G).eigenvectors[:, 0]
    return float(np.linalg.norm(DA @ x) + np.linalg.norm(DB @ x))


def dw_antidiag_upper_norm(A, B, attain_tol: float = 1e-8) -> tuple[float, str]:
    """Norm-only upper bound for dw([[0, A], [B, 0]]) and the branch that produced it.

    The branch is ``"ratio"`` or ``"max"``; ``"+attained"`` is appended when
    A and B share a unit vector x with Ax = ||A||x and Bx = ||B||x.
    """
    A, B = _same_size(A, B)
    a, b = op_norm(A), op_norm(B)
    if a <= ZERO_NORM or b <= ZERO_NORM:
        raise ZeroBlock("both blocks must be non-zero")
    ratio = (a - b) / (a + b)
    if -1.0 / (2.0 * b * b) < ratio < 1.0 / (2.0 * a * a):
        sq = ((a + b) ** 2 + 4.0 * a * a * b * b) / (4.0 * (1.0 - (a - b) ** 2))
        case = "ratio"
    else:
        sq = max(a ** 4, b ** 4)
        case = "max"
    if _shared_top_eigvec_residual(A, B, a, b) <= attain_tol * max(1.0, a, b):
        case += "+attained"
    return math.sqrt(sq), case


# ---------------------------------------------------------------- triangular bounds


def dw_triangular_upper_35(A, B, C) -> float:
    A, B, C = _same_size(A, B, C)
    norms = [op_norm(X) for X in (A, B, C)]
    top = max(norms)
    return math.sqrt(2.25 * top ** 2 + (14.0 + 6.0 * math.sqrt(5.0)) / 4.0 * top ** 4)


def dw_triangular_upper_34(A, B, C, config: SearchConfig = DEFAULT) -> float:
    A, B, C = _same_size(A, B, C)
    return (max(_dw(A, config), _dw(C, config)) + op_norm(A.conj().T @ B)
            + nilpotent_value(op_norm(B)))


# ---------------------------------------------------------------- shifts


def shift_matrix(n: int, left: bool = False) -> np.ndarray:
    """Right shift (ones on the subdiagonal) or its adjoint, the left shift."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise BadDimension(f"shift dimension must be an integer >= 2, got {n!r}")
    return np.eye(n, k=1 if left else -1, dtype=np.complex128)


def shift_bounds(n: int, left: bool = False,
                 config: SearchConfig = DEFAULT) -> tuple[float, float, float]:
    """(lower, upper, dw estimate) for the n-dimensional shift."""
    S = shift_matrix(n, left)
    lower = math.sqrt(math.cos(math.pi / n) ** 2 + 1.0)
    upper = math.sqrt(math.cos(math.pi / (n + 1)) ** 2 + 1.0)
    return lower, upper, _dw(S, config)


# ---------------------------------------------------------------- spec constructors


def block_formulas(spec: BlockSpec, config: SearchConfig = DEFAULT) -> dict:
    """Exact values and bounds that apply to ``spec``, keyed by name."""
    b = spec.blocks
    out: dict = {}
    if spec.layout == "diag":
        out["diag.exact"] = dw_diag_exact(b["A"], b["B"], config)
    elif spec.layout == "antidiag":
        A, B = b["A"], b["B"]
        out["antidiag.lower"] = dw_antidiag_lower(A, B, config)
        out["antidiag.piecewise_upper"] = dw_antidiag_upper_piecewise(A, B)
        out["antidiag.abs_upper"] = dw_antidiag_upper_abs(A, B)
        try:
            value, case = dw_antidiag_upper_norm(A, B)
            out["antidiag.norm_upper"] = value
            out["antidiag.norm_case"] = case
        except ZeroBlock:
            pass
    elif spec.layout == "upper_left":
        out["upper_left.exact"] = dw_I_B_exact(b["B"])
    elif spec.layout == "nilpotent":
        out["nilpotent.exact"] = dw_nilpotent_exact(b["B"])
    else:
        A, B, C = b["A"], b["B"], b["C"]
        out["triangular.upper_norms"] = dw_triangular_upper_35(A, B, C)
        out["triangular.upper_split"] = dw_triangular_upper_34(A, B, C, config)
    return out


def diag_spec(A, B) -> BlockSpec:
    return BlockSpec("diag", {"A": A, "B": B})


def antidiag_spec(A, B) -> BlockSpec:
    return BlockSpec("antidiag", {"A": A, "B": B})


def upper_left_spec(B) -> BlockSpec:
    return BlockSpec("upper_left", {"B": B})


def nilpotent_spec(B) -> BlockSpec:
    return BlockSpec("nilpotent", {"B": B})


def triangular_spec(A, B, C) -> BlockSpec:
    return BlockSpec("triangular", {"A": A, "B": B, "C": C})

