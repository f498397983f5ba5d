"""Closed-form cyclic slopes and Lyapunov sums against the generic pipeline."""

import argparse
from dataclasses import dataclass

from hurwitz_slopes.cyclic import all_specs, cyclic_cross_check, cyclic_genus, degree_bound_check


@dataclass
class SweepConfig:
    max_degree: int = 8
    bound_degree: int = 24


def run(cfg: SweepConfig):
    failures = 0
    print(f"{'d':>3} {'exponents':>14} {'g':>3} {'slope':>10} {'L':>8}  ok")
    for d in range(2, cfg.max_degree + 1):
        for spec in all_specs(d):
            rep = cyclic_cross_check(spec)
            failures += not rep.passed
            a = ",".join(map(str, spec.exponents))
            print(f"{d:>3} {a:>14} {cyclic_genus(spec):>3} {str(rep.closed_slope):>10} "
                  f"{str(rep.closed_lyapunov):>8}  {'yes' if rep.passed else 'NO ' + '; '.join(rep.failures)}")
    violations = [
        s for d in range(2, cfg.bound_degree + 1) for s in all_specs(d)
        if degree_bound_check(cyclic_genus(s), d) is False
    ]
    print(f"\npipeline mismatches: {failures}")
    print(f"degree bound d <= 12(g-1) violations up to d={cfg.bound_degree}: {len(violations)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    ap.add_argument("--bound-degree", type=int, default=SweepConfig.bound_degree)
    args = ap.parse_args()
    run(SweepConfig(args.max_degree, args.bound_degree))


if __name__ == "__main__":
    main()
