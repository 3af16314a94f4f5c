"""Exact block values and block bounds next to the sphere-search estimate of each assembled matrix."""

from dwradius.blocks import assemble, block_formulas, cubic_theta
from dwradius.builtins import BLOCK_BUILTINS
from dwradius.quantities import dw_radius


def main() -> int:
    ct = cubic_theta(2.0)
    print(f"cubic scalars at b=2: p={ct.p} q={ct.q} r={ct.r} s={ct.s} alpha={ct.alpha} "
          f"beta={ct.beta:.4f} gamma={ct.gamma:.4f} theta0={ct.theta0:.6f}\n")
    for name, spec in BLOCK_BUILTINS.items():
        est = dw_radius(assemble(spec))[0]
        print(f"{name} ({spec.layout}): sphere estimate {est:.9g}")
        for key, value in block_formulas(spec).items():
            shown = value if isinstance(value, str) else f"{value:.9g}"
            print(f"    {key:<26} {shown}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
