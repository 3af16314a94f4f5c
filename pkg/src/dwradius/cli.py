"""Command-line front end (``dwr``).

Exit codes: 0 success, 1 comparison-table mismatch, 2 internal invariant
violated, 64 unreadable input, 65 bad dimensions or block layout.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import blocks, bounds, report
from .builtins import BLOCK_BUILTINS, BUILTINS, builtin_block, builtin_matrix
from .config import DEFAULT, SearchConfig
from .errors import BadDimension, DimensionMismatch, InvalidMatrix, LayoutError, ParseError
from .linalg import as_square
from .matrix_io import load_json, parse_matrix
from .properties import SuiteReport, run_suite
from .quantities import dw_radius, nr_profile

EXIT_MISMATCH = 1
EXIT_INVARIANT = 2
EXIT_PARSE = 64
EXIT_DIMENSION = 65


def _config(seed: int | None) -> SearchConfig:
    if seed is None and os.environ.get("DWR_SEED"):
        try:
            seed = int(os.environ["DWR_SEED"], 0)
        except ValueError:
            raise ParseError(f"DWR_SEED must be an integer, got {os.environ['DWR_SEED']!r}") from None
    return DEFAULT.with_seed(seed)


def _input(path: str | None, builtin: str | None, loader, builtin_loader):
    if (path is None) == (builtin is None):
        raise ParseError("give exactly one of a file path or --builtin NAME")
    if builtin is not None:
        return builtin, builtin_loader(builtin)
    return path, loader(load_json(path))


def cmd_analyze(args) -> int:
    config = _config(args.seed)
    label, T = _input(args.path, args.builtin, parse_matrix, builtin_matrix)
    T = as_square(T)
    profile = nr_profile(T, config)
    catalog = bounds.full_catalog(T, config)
    sys.stdout.write(report.render_analysis(label, profile, catalog, args.format))
    problems = profile.sandwich_violations(1e-6) + report.catalog_violations(catalog)
    if problems:
        for p in problems:
            print(f"invariant violated: {p}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


def cmd_table(args) -> int:
    table = report.comparison_table(_config(args.seed))
    sys.stdout.write(report.render_table(table, args.format))
    if table.mismatches:
        for c in table.mismatches:
            print(f"mismatch {c.row} {c.matrix}: computed {report.fmt(c.computed)}, "
                  f"expected {c.expected}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_block(args) -> int:
    config = _config(args.seed)
    label, spec = _input(args.path, args.builtin, blocks.BlockSpec.from_json, builtin_block)
    T = blocks.assemble(spec)
    dw = dw_radius(T, config)[0]
    formulas = blocks.block_formulas(spec, config)
    sys.stdout.write(report.render_block(f"{label} ({spec.layout})", dw, formulas, args.format))
    bad = []
    for key, value in formulas.items():
        if isinstance(value, str):
            continue
        if key.endswith("exact") and abs(value - dw) > 1e-4:
            bad.append(f"{key} differs from the assembled estimate by {abs(value - dw):.3e}")
        elif key.endswith("lower") and value > dw + 1e-6:
            bad.append(f"{key} exceeds the assembled estimate")
        elif not key.endswith(("exact", "lower")) and value < dw - 1e-6:
            bad.append(f"{key} is below the assembled estimate")
    for b in bad:
        print(f"invariant violated: {b}", file=sys.stderr)
    return EXIT_INVARIANT if bad else 0


def _oracle_report(count: int, seed: int, config: SearchConfig) -> SuiteReport:
    from .oracles import dw_bruteforce_2x2
    from .properties import random_complex

    rng = np.random.default_rng(seed)
    rep = SuiteReport()
    for k in range(count):
        T = random_complex(rng, 2)
        diff = abs(dw_bruteforce_2x2(T) - dw_radius(T, config)[0])
        rep.record("oracle.2x2", 1e-5 - diff, f"#{k}")
    return rep


def cmd_fuzz(args) -> int:
    if args.count < 1:
        raise BadDimension("count must be at least 1")
    if not 2 <= args.dim <= 16:
        raise BadDimension(f"dim must lie in [2, 16], got {args.dim}")
    seed = args.seed if args.seed is not None else _config(None).seed
    config = DEFAULT.with_seed(seed)
    rep = run_suite(args.count, [args.dim], seed, config, normal=args.normal)
    if args.oracle:
        if args.dim != 2:
            raise BadDimension("the brute-force oracle needs --dim 2")
        rep.merge(_oracle_report(args.count, seed, config))
    print(f"matrices {args.count}  dim {args.dim}  seed {seed}  checks {rep.checks}  "
          f"violations {len(rep.violations)}")
    for name in sorted(rep.worst):
        print(f"  worst margin {name:<20} {report.fmt(rep.worst[name])}")
    for name, label, margin in rep.violations[:20]:
        print(f"violation {name} {label} margin {report.fmt(margin)}", file=sys.stderr)
    return EXIT_INVARIANT if rep.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dwr", description="Davis-Wielandt radius toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=report.FORMATS, default="table")

    def add_seed(p):
        p.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                       help="search seed (default: $DWR_SEED or 0x5EED)")

    p = sub.add_parser("analyze", help="profile and bound catalog for one matrix")
    p.add_argument("path", nargs="?")
    p.add_argument("--builtin", choices=sorted(BUILTINS))
    add_seed(p)
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("paper-table", help="reproduce the comparison table of squared upper bounds")
    add_seed(p)
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("block", help="exact values and bounds for a 2x2 block matrix")
    p.add_argument("path", nargs="?")
    p.add_argument("--builtin", choices=sorted(BLOCK_BUILTINS))
    add_seed(p)
    add_format(p)
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("fuzz", help="run the invariant suites on random matrices")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--dim", type=int, default=4)
    add_seed(p)
    p.add_argument("--normal", action="store_true", help="draw normal matrices (adds the normaloid check)")
    p.add_argument("--oracle", action="store_true", help="cross-check 2x2 estimates by brute force")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidMatrix) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, LayoutError, BadDimension) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION


if __name__ == "__main__":
    sys.exit(main())
