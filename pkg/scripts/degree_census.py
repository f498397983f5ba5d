"""Every profile of small degree: class counts, orbit counts and the slope range."""

import argparse
import time
from fractions import Fraction

from hurwitz_slopes import orbit_decompose, slope
from hurwitz_slopes.hurwitz import enumerate_degree, genus_of_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--parallel", type=int, default=None)
    args = ap.parse_args()
    for d in range(2, args.max_degree + 1):
        t = time.perf_counter()
        table = enumerate_degree(d, workers=args.parallel)
        nonempty = {p: cs for p, cs in table.items() if cs.count}
        orbits = 0
        lo, hi = None, None
        for p, cs in nonempty.items():
            if genus_of_profile(p) < 2:
                continue
            for o in orbit_decompose(cs):
                orbits += 1
                s = slope(o).slope
                lo = s if lo is None else min(lo, s)
                hi = s if hi is None else max(hi, s)
        classes = sum(cs.count for cs in nonempty.values())
        span = f"[{lo}, {hi}] ~ [{float(lo):.3f}, {float(hi):.3f}]" if lo is not None else "-"
        print(f"d={d}: {len(nonempty)} nonempty profiles, {classes} classes, "
              f"{orbits} orbits with g>=2, slopes {span}, {time.perf_counter() - t:.1f} s")


if __name__ == "__main__":
    main()
