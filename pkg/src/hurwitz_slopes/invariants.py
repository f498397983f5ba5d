"""Boundary and Hodge degrees of a Hurwitz component, and its slope.

With defect = d - sum_{i,j} 1/a_ij over the four branch cycle types::

    deg delta  = delta_O
    deg lambda = (delta'_O + defect * |O|) / 12
    slope      = deg delta / deg lambda
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .braid import Orbit, orbit_decompose
from .degen import DIRECTIONS, DegenerationReport, degenerate
from .hurwitz import RamificationProfile, enumerate_covers, genus_of_profile


class DegenerateFamily(ValueError):
    pass


@dataclass(frozen=True)
class SlopeReport:
    profile: RamificationProfile
    orbit_size: int
    delta_O: Fraction
    delta_prime_O: Fraction
    ramification_defect: Fraction
    deg_delta: Fraction
    deg_lambda: Fraction
    slope: Fraction
    orbit_count: int = 1
    rational_tails: int = 0
    warnings: tuple[str, ...] = field(default=())


def orbit_degenerations(o: Orbit) -> list[DegenerationReport]:
    return [degenerate(r, j) for r in o.members for j in DIRECTIONS]


def delta_sums(o: Orbit) -> tuple[Fraction, Fraction]:
    """(delta_O, delta'_O): weights summed over members and all three directions."""
    if not o.members:
        raise ValueError("empty orbit")
    reps = orbit_degenerations(o)
    return (
        sum((x.delta for x in reps), Fraction(0)),
        sum((x.delta_prime for x in reps), Fraction(0)),
    )


def _report(profile, size, reports: Iterable[DegenerationReport], orbit_count) -> SlopeReport:
    reports = list(reports)
    delta = sum((x.delta for x in reports), Fraction(0))
    delta_prime = sum((x.delta_prime for x in reports), Fraction(0))
    defect = profile.ramification_defect()
    for x in reports:
        if x.tuple.profile() != profile:
            raise ValueError(f"member {x.tuple} does not have profile {profile}")
    deg_lambda = (delta_prime + defect * size) / 12
    if deg_lambda == 0:
        raise DegenerateFamily(f"deg lambda vanishes for profile {profile}")
    warnings = []
    g = genus_of_profile(profile)
    if g < 2:
        warnings.append(f"genus {g} < 2: boundary weights are formal")
    if any(x.bridge_chains for x in reports):
        warnings.append("chain of genus-0 bridges present: every chain node counted as surviving")
    return SlopeReport(
        profile=profile,
        orbit_size=size,
        delta_O=delta,
        delta_prime_O=delta_prime,
        ramification_defect=defect,
        deg_delta=delta,
        deg_lambda=deg_lambda,
        slope=delta / deg_lambda,
        orbit_count=orbit_count,
        rational_tails=sum(x.rational_tails for x in reports),
        warnings=tuple(warnings),
    )


def slope(o: Orbit) -> SlopeReport:
    if not o.members:
        raise ValueError("empty orbit")
    return _report(o.profile, o.size, orbit_degenerations(o), 1)


def slope_of_orbits(profile: RamificationProfile, orbits: list[Orbit]) -> SlopeReport:
    """Aggregate over several orbits of one profile (|O| becomes the total count)."""
    size = sum(o.size for o in orbits)
    if size == 0:
        raise ValueError(f"no covers with profile {profile}")
    reps = [x for o in orbits for x in orbit_degenerations(o)]
    return _report(profile, size, reps, len(orbits))


def slope_of_space(c: RamificationProfile, workers: int | None = None) -> SlopeReport:
    """Slope of the whole Hurwitz space: sums over every orbit, |O| replaced by N_d(c)."""
    covers = enumerate_covers(c, workers=workers)
    if not covers.count:
        raise ValueError(f"no covers with profile {c}")
    return slope_of_orbits(c, orbit_decompose(covers))
