"""Shift operators: the closed-form bracket around the estimated dw as n grows."""

import math
from dataclasses import dataclass

from dwradius.blocks import shift_bounds


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 16


def main(cfg: Config = Config()) -> int:
    print(f"{'n':>3} {'lower':>12} {'dw est':>12} {'upper':>12} {'width':>10}")
    bad = 0
    for n in range(cfg.n_min, cfg.n_max + 1):
        lo, up, est = shift_bounds(n)
        ok = lo - 1e-9 <= est <= up + 1e-9
        bad += not ok
        print(f"{n:>3} {lo:12.9f} {est:12.9f} {up:12.9f} {up - lo:10.2e}{'' if ok else '  OUTSIDE'}")
    print(f"limit sqrt(2) = {math.sqrt(2):.9f}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
