"""Walk through the degree-4 profile 4|4|3,1|3,1: classes, orbits, degenerations, slopes."""

import argparse

from hurwitz_slopes import RamificationProfile, degenerate, enumerate_covers, orbit_decompose, slope
from hurwitz_slopes.notation import format_rational, parse_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--profile", default="4|4|3,1|3,1")
    args = ap.parse_args()

    profile: RamificationProfile = parse_profile(args.profile, args.degree)
    covers = enumerate_covers(profile)
    print(f"profile {profile}: {covers.count} classes")
    for k, orbit in enumerate(orbit_decompose(covers)):
        rep = slope(orbit)
        print(f"\norbit {k}: size {orbit.size}, delta {format_rational(rep.delta_O)}, "
              f"delta' {format_rational(rep.delta_prime_O)}, slope {format_rational(rep.slope)}")
        for r in orbit:
            cells = []
            for j in (1, 2, 3):
                d = degenerate(r, j)
                cells.append(f"{format_rational(d.delta)} ({format_rational(d.delta_prime)})")
            print(f"  {r}   delta (delta') for directions 1,2,3: {', '.join(cells)}")


if __name__ == "__main__":
    main()
