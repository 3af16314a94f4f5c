from __future__ import annotations

from dataclasses import dataclass, replace

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class SearchConfig:
    """Grid sizes and stopping rules for every numerical search.

    The shell sweep only visits directions with a non-negative ``||Tx||^2``
    component (phi in [0, pi/2]); the farthest shell point is always exposed
    by such a direction.
    """

    theta_points: int = 2048
    bracket_width: float = 1e-12
    refine_brackets: int = 3

    sweep_theta: int = 256
    sweep_phi: int = 65
    sweep_candidates: int = 8
    degenerate_gap: float = 1e-9
    degenerate_samples: int = 16

    restarts: int = 64
    max_iter: int = 500
    grad_tol: float = 1e-10
    polish_iter: int = 200

    seed: int = DEFAULT_SEED

    def with_seed(self, seed: int | None) -> "SearchConfig":
        return self if seed is None else replace(self, seed=int(seed))


DEFAULT = SearchConfig()
