"""Run the invariant suites on a random corpus and report the worst margin per check."""

import argparse
import time
from dataclasses import dataclass, field

from dwradius.config import DEFAULT
from dwradius.properties import run_suite


@dataclass
class Config:
    count: int = 200
    dims: list = field(default_factory=lambda: [2, 3, 4, 5, 6])
    seed: int = 0
    normal: bool = False


def main(cfg: Config) -> int:
    start = time.perf_counter()
    rep = run_suite(cfg.count, cfg.dims, cfg.seed, DEFAULT.with_seed(cfg.seed), normal=cfg.normal)
    print(f"{cfg.count} matrices, dims {cfg.dims}, {rep.checks} checks, "
          f"{len(rep.violations)} violations, {time.perf_counter() - start:.1f} s")
    for name in sorted(rep.worst):
        print(f"  {name:<20} worst margin {rep.worst[name]: .3e}")
    for v in rep.violations[:10]:
        print("  violation", *v)
    return 1 if rep.violations else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--normal", action="store_true")
    a = p.parse_args()
    raise SystemExit(main(Config(a.count, a.dims, a.seed, a.normal)))
