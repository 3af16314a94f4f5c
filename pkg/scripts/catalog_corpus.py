"""Every catalog entry against the dw estimate on a Gaussian corpus (default 1000 matrices, n in 2..6)."""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from dwradius import bounds
from dwradius.properties import random_complex


@dataclass
class Config:
    count: int = 1000
    seed: int = 0
    tol: float = 1e-6


def main(cfg: Config) -> int:
    rng = np.random.default_rng(cfg.seed)
    start = time.perf_counter()
    worst: dict[str, float] = {}
    bad = []
    for k in range(cfg.count):
        T = random_complex(rng, 2 + k % 5)
        cat = bounds.full_catalog(T)
        dw = next(b.value for b in cat if b.kind == bounds.ESTIMATE)
        for b in cat:
            if b.kind == bounds.ESTIMATE:
                continue
            margin = dw - b.value if b.kind == bounds.LOWER else b.value - dw
            worst[b.id] = min(worst.get(b.id, np.inf), margin)
            if margin < -cfg.tol:
                bad.append((k, b.id, margin))
    print(f"{cfg.count} matrices, {len(bad)} violations, {time.perf_counter() - start:.0f} s")
    for bid in sorted(worst):
        print(f"  {bid:<12} worst margin {worst[bid]: .3e}")
    for k, bid, m in bad[:20]:
        print(f"  violation #{k} {bid} {m:.3e}")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    raise SystemExit(main(Config(a.count, a.seed)))
