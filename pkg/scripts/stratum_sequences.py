"""Finite-degree Siegel-Veech estimates and slopes for pillowcase covers.

Prints one row per degree with first differences of the estimate, so the
trend can be judged by eye; nothing is extrapolated.
"""

import argparse
from dataclasses import dataclass, field

from hurwitz_slopes.notation import format_rational
from hurwitz_slopes.qdiff import (
    OddPartition,
    ScanConfig,
    asymptotic_bound,
    first_differences,
    kappa,
    stratum_scan,
    sv_lyapunov_relation,
)


@dataclass
class SequenceConfig:
    nu: tuple[int, ...] = (1, 1, 1, 1)
    d_values: list[int] = field(default_factory=lambda: [12, 14])
    budget: int = 5_000_000


def run(cfg: SequenceConfig):
    nu = OddPartition(cfg.nu)
    print(f"nu={nu}  genus {nu.genus}  kappa {format_rational(kappa(nu))}  "
          f"bound if c=1: {format_rational(asymptotic_bound(nu))}")
    rows = stratum_scan(nu, cfg.d_values, ScanConfig(budget=cfg.budget))
    for row, diff in zip(rows, first_differences(rows)):
        if row.skipped:
            print(f"d={row.d:>3}  skipped: {row.skipped_reason}")
            continue
        rel = sv_lyapunov_relation(nu, row)
        print(
            f"d={row.d:>3}  N={row.N:<7} orbits={row.orbit_count:<4} delta={format_rational(row.delta_d_nu):<8} "
            f"slope={format_rational(row.slope):<8} c_d={format_rational(row.sv_estimate):<8} "
            f"diff={format_rational(diff) if diff is not None else '-':<8} identity={'ok' if rel.holds else 'BROKEN'}"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nu", default="1,1,1,1")
    ap.add_argument("--d-values", default="12,14")
    ap.add_argument("--budget", type=int, default=SequenceConfig.budget)
    args = ap.parse_args()
    cfg = SequenceConfig(
        nu=tuple(int(x) for x in args.nu.split(",")),
        d_values=[int(x) for x in args.d_values.split(",")],
        budget=args.budget,
    )
    run(cfg)


if __name__ == "__main__":
    main()
