"""Pillowcase covers attached to strata Q(nu) of quadratic differentials with odd zeros.

A partition nu = (d_1, ..., d_l) of 4g-4 into odd parts gives the profile
c_nu = ((d_1+2, ..., d_l+2, 2, ..., 2), (2^{d/2}), (2^{d/2}), (2^{d/2})) in even
degree d.  For each d we compute the finite-degree Siegel-Veech estimate
delta_{d,nu} / (6 N_{d,nu}); the 6 is 3 degeneration directions (only the
horizontal one is counted) times 2 squares per pillowcase cylinder unit.
Limits are never extrapolated here.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .braid import orbit_decompose
from .hurwitz import RamificationProfile, enumerate_covers, estimated_work, genus_of_profile
from .invariants import SlopeReport, slope, slope_of_orbits

SV_DENOMINATOR = 6  # 3 directions x 2 squares per pillowcase cylinder


@dataclass(frozen=True)
class OddPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(x) for x in self.parts))
        object.__setattr__(self, "parts", parts)
        if not parts or any(x < 1 or x % 2 == 0 for x in parts):
            raise ValueError(f"parts must be odd positive integers: {parts}")
        if len(parts) % 2:
            raise ValueError(f"number of parts must be even: {parts}")
        if sum(parts) % 4:
            raise ValueError(f"sum {sum(parts)} is not of the form 4g-4")
        if self.genus < 2:
            raise ValueError(f"genus {self.genus} < 2")

    @classmethod
    def of(cls, *parts: int) -> OddPartition:
        return cls(tuple(parts))

    @property
    def genus(self) -> int:
        return (sum(self.parts) + 4) // 4

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> tuple[int, ...]:
        return tuple((x + 1) // 2 for x in self.parts)

    def min_degree(self) -> int:
        return sum(x + 2 for x in self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class ScanConfig:
    budget: int = 2_000_000
    workers: int | None = None


@dataclass
class StratumScanRow:
    d: int
    N: int | None = None
    delta_d_nu: Fraction | None = None
    delta_prime_d_nu: Fraction | None = None
    slope: Fraction | None = None
    sv_estimate: Fraction | None = None
    orbit_count: int | None = None
    rational_tails: int | None = None
    orbit_reports: list[SlopeReport] = field(default_factory=list)
    skipped_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None


def stratum_profile(nu: OddPartition, d: int) -> RamificationProfile:
    if d % 2:
        raise ValueError(f"degree {d} must be even")
    if d < nu.min_degree():
        raise ValueError(f"degree {d} below the minimum {nu.min_degree()} for nu={nu}")
    c1 = [x + 2 for x in nu.parts] + [2] * ((d - nu.min_degree()) // 2)
    two = [2] * (d // 2)
    profile = RamificationProfile.of(c1, two, two, two)
    assert genus_of_profile(profile) == nu.genus
    return profile


def kappa(nu: OddPartition) -> Fraction:
    return sum((Fraction(x * (x + 4), x + 2) for x in nu.parts), Fraction(0)) / 24


def slope_from_counts(nu: OddPartition, count: int, delta: Fraction) -> Fraction:
    """12 / (1 + (1/4) sum d_i(d_i+4)/(d_i+2) * count/delta)."""
    total = sum((Fraction(x * (x + 4), x + 2) for x in nu.parts), Fraction(0))
    return 12 / (1 + total / 4 * Fraction(count) / delta)


def stratum_row(nu: OddPartition, d: int, config: ScanConfig = ScanConfig()) -> StratumScanRow:
    row = StratumScanRow(d=d)
    try:
        profile = stratum_profile(nu, d)
    except ValueError as exc:
        row.skipped_reason = str(exc)
        return row
    work = estimated_work(profile)
    if work > config.budget:
        row.skipped_reason = f"estimated work {work} exceeds budget {config.budget}"
        return row
    covers = enumerate_covers(profile, workers=config.workers)
    if not covers.count:
        row.skipped_reason = "no connected covers"
        return row
    orbits = orbit_decompose(covers)
    row.orbit_reports = [slope(o) for o in orbits]
    space = slope_of_orbits(profile, orbits)
    row.N = covers.count
    row.delta_d_nu = space.delta_O
    row.delta_prime_d_nu = space.delta_prime_O
    row.slope = space.slope
    row.sv_estimate = space.delta_O / (SV_DENOMINATOR * covers.count)
    row.orbit_count = len(orbits)
    row.rational_tails = space.rational_tails
    return row


def stratum_scan(
    nu: OddPartition, d_values: Sequence[int], config: ScanConfig = ScanConfig()
) -> list[StratumScanRow]:
    """One row per degree; infeasible or over-budget degrees come back skipped."""
    return [stratum_row(nu, d, config) for d in d_values]


def first_differences(rows: Sequence[StratumScanRow]) -> list[Fraction | None]:
    """sv_estimate[i] - sv_estimate[i-1] across consecutive computed rows (None for the first)."""
    out: list[Fraction | None] = []
    prev = None
    for row in rows:
        if row.sv_estimate is None:
            out.append(None)
            continue
        out.append(None if prev is None else row.sv_estimate - prev)
        prev = row.sv_estimate
    return out


@dataclass(frozen=True)
class RelationReport:
    kappa: Fraction
    c: Fraction
    lyapunov_estimate: Fraction
    predicted_slope: Fraction
    slope: Fraction

    @property
    def holds(self) -> bool:
        return self.predicted_slope == self.slope


def sv_lyapunov_relation(nu: OddPartition, row: StratumScanRow) -> RelationReport:
    """Check slope = 12c/(kappa + c) with c the finite-degree Siegel-Veech estimate."""
    if row.skipped:
        raise ValueError(f"row d={row.d} was skipped: {row.skipped_reason}")
    k = kappa(nu)
    c = row.sv_estimate
    return RelationReport(
        kappa=k,
        c=c,
        lyapunov_estimate=k + c,
        predicted_slope=12 * c / (k + c),
        slope=row.slope,
    )


def asymptotic_bound(nu: OddPartition) -> Fraction:
    """12 / (1 + kappa), the slope obtained if the Siegel-Veech constant were 1."""
    return 12 / (1 + kappa(nu))


def extremal_partition(g: int) -> OddPartition:
    """(1, ..., 1, 3g-3) with g parts; requires g even so that 3g-3 is odd."""
    if g < 2 or g % 2:
        raise ValueError(f"needs an even genus >= 2, got {g}")
    return OddPartition(tuple([1] * (g - 1) + [3 * g - 3]))


def de_jonquieres_count(g: int, zeros: Sequence[int]) -> int:
    """Coefficient of prod t_i^{h_i} in (1 + sum a_i^2 t_i)^g.

    ``zeros`` is the multiset of zero orders; a_i runs over its distinct values
    and h_i over their multiplicities.
    """
    mult = Counter(int(z) for z in zeros)
    if any(a < 1 for a in mult):
        raise ValueError("zero orders must be positive")
    if sum(a * h for a, h in mult.items()) != 4 * g - 4:
        raise ValueError(f"zero orders must sum to 4g-4 = {4 * g - 4}")
    total = sum(mult.values())
    if total > g:
        raise ValueError(f"{total} zeros exceed genus {g}")
    coeff = math.factorial(g) // math.factorial(g - total)
    for h in mult.values():
        coeff //= math.factorial(h)
    return coeff * math.prod(a ** (2 * h) for a, h in mult.items())
