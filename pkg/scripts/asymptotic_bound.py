"""12/(1+kappa) for nu = (1, ..., 1, 3g-3) compared with 432/(7g)."""

import argparse
from fractions import Fraction

from hurwitz_slopes.qdiff import asymptotic_bound, extremal_partition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genera", default="2,4,10,100,1000,10000")
    args = ap.parse_args()
    print(f"{'g':>6} {'bound':>12} {'432/(7g)':>12} {'ratio':>9}")
    for g in (int(x) for x in args.genera.split(",")):
        b = asymptotic_bound(extremal_partition(g))
        ref = Fraction(432, 7 * g)
        print(f"{g:>6} {float(b):>12.6f} {float(ref):>12.6f} {float(b / ref):>9.5f}")


if __name__ == "__main__":
    main()
