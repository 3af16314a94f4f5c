"""Recompute the squared upper bounds for the four comparison matrices and diff them against the reference values."""

from dataclasses import dataclass

from dwradius.config import DEFAULT
from dwradius.report import TABLE_MATRICES, TABLE_ROWS, comparison_table, fmt


@dataclass
class Config:
    seed: int = DEFAULT.seed


def main(cfg: Config = Config()) -> int:
    table = comparison_table(DEFAULT.with_seed(cfg.seed))
    print(f"{'bound':<12}" + "".join(f"{m:>22}" for m in TABLE_MATRICES))
    for row in TABLE_ROWS:
        cells = [table.cell(row, m) for m in TABLE_MATRICES]
        print(f"{row:<12}" + "".join(f"{fmt(c.computed):>12} ({c.expected:>7})" for c in cells))
    worst = max(table.cells, key=lambda c: c.error)
    print(f"\nworst cell {worst.row}/{worst.matrix}: |diff| = {worst.error:.2e}; "
          f"{len(table.mismatches)} cells beyond tolerance")
    return 1 if table.mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
