"""Cyclic covers y^d = (x-z1)^a1 (x-z2)^a2 (x-z3)^a3 (x-z4)^a4.

Closed forms are evaluated from the exponents alone (gcds); ``cyclic_cross_check``
runs the permutation pipeline on the same cover and compares.  The two routes
share no code beyond the permutation type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterator

from .braid import orbit_of
from .degen import degenerate
from .hurwitz import MonodromyTuple, genus_of_profile
from .invariants import slope
from .perm import Permutation


@dataclass(frozen=True)
class CyclicCoverSpec:
    d: int
    exponents: tuple[int, int, int, int]

    def __post_init__(self):
        a = tuple(int(x) for x in self.exponents)
        object.__setattr__(self, "exponents", a)
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if len(a) != 4:
            raise ValueError("exactly four exponents are required")
        if any(not 1 <= x <= self.d - 1 for x in a):
            raise ValueError(f"exponents must lie in [1, {self.d - 1}]: {a}")
        if sum(a) % self.d:
            raise ValueError(f"exponent sum {sum(a)} is not divisible by {self.d}")
        if gcd(*a, self.d) != 1:
            raise ValueError("gcd(a1, a2, a3, a4, d) must be 1")

    def d_i(self, i: int) -> int:
        return gcd(self.exponents[i - 1], self.d)

    def s(self, i: int, j: int) -> int:
        a = self.exponents
        return gcd(a[i - 1] + a[j - 1], self.d)

    def t(self, i: int, j: int) -> int:
        a = self.exponents
        return gcd(a[i - 1], a[j - 1], self.d)


def all_specs(d: int) -> Iterator[CyclicCoverSpec]:
    """Every valid exponent vector of degree ``d``, in lexicographic order."""
    for a in product(range(1, d), repeat=4):
        if sum(a) % d == 0 and gcd(*a, d) == 1:
            yield CyclicCoverSpec(d, a)


def cyclic_tuple(spec: CyclicCoverSpec) -> MonodromyTuple:
    d = spec.d
    return MonodromyTuple(
        [Permutation([(x + a) % d + 1 for x in range(d)]) for a in spec.exponents]
    )


def cyclic_slope(spec: CyclicCoverSpec) -> Fraction:
    d = spec.d
    ss = spec.s(1, 2) ** 2 + spec.s(2, 3) ** 2 + spec.s(1, 3) ** 2
    denom = ss + d * d - sum(spec.d_i(i) ** 2 for i in range(1, 5))
    if denom == 0:
        raise ZeroDivisionError(f"slope undefined for {spec}")
    return Fraction(12 * ss, denom)


def cyclic_lyapunov_sum(spec: CyclicCoverSpec) -> Fraction:
    d, a = spec.d, spec.exponents
    return (
        Fraction(d, 6)
        - Fraction(sum(gcd(d, x) ** 2 for x in a), 6 * d)
        + Fraction(gcd(d, a[0] + a[1]) ** 2 + gcd(d, a[0] + a[2]) ** 2 + gcd(d, a[1] + a[2]) ** 2, 6 * d)
    )


def cyclic_genus(spec: CyclicCoverSpec) -> int:
    twice = 2 * (spec.d + 1) - sum(gcd(x, spec.d) for x in spec.exponents)
    return twice // 2


def degree_bound_check(g: int, d: int) -> bool | None:
    """Whether d <= 12(g-1); ``None`` when the bound does not apply (g < 2)."""
    if g < 2:
        return None
    return d <= 12 * (g - 1)


@dataclass
class CrossCheckReport:
    spec: CyclicCoverSpec
    passed: bool
    orbit_size: int
    deltas: tuple[Fraction, Fraction, Fraction]
    delta_primes: tuple[Fraction, Fraction, Fraction]
    pipeline_slope: Fraction
    closed_slope: Fraction
    pipeline_lyapunov: Fraction
    closed_lyapunov: Fraction
    rational_tails: int
    failures: list[str] = field(default_factory=list)


def cyclic_cross_check(spec: CyclicCoverSpec) -> CrossCheckReport:
    r = cyclic_tuple(spec)
    orb = orbit_of(r)
    reps = {j: degenerate(r, j) for j in (1, 2, 3)}
    d = spec.d
    # p4 -> p3 pinches (12|34); p4 -> p1 pinches (23|14); p4 -> p2 pinches (13|24)
    expected = {
        3: Fraction(spec.s(1, 2) ** 2, d),
        1: Fraction(spec.s(2, 3) ** 2, d),
        2: Fraction(spec.s(1, 3) ** 2, d),
    }
    rep = slope(orb)
    report = CrossCheckReport(
        spec=spec,
        passed=True,
        orbit_size=orb.size,
        deltas=tuple(reps[j].delta for j in (1, 2, 3)),
        delta_primes=tuple(reps[j].delta_prime for j in (1, 2, 3)),
        pipeline_slope=rep.slope,
        closed_slope=cyclic_slope(spec),
        pipeline_lyapunov=2 * rep.deg_lambda,
        closed_lyapunov=cyclic_lyapunov_sum(spec),
        rational_tails=sum(x.rational_tails for x in reps.values()),
    )
    fail = report.failures
    if orb.size != 1:
        fail.append(f"orbit has {orb.size} classes, expected 1")
    for j in (1, 2, 3):
        if reps[j].delta != expected[j] or reps[j].delta_prime != expected[j]:
            fail.append(
                f"direction {j}: delta={reps[j].delta} delta'={reps[j].delta_prime}, expected {expected[j]}"
            )
    if report.rational_tails:
        fail.append(f"{report.rational_tails} rational tail(s) found")
    if report.pipeline_slope != report.closed_slope:
        fail.append(f"slope {report.pipeline_slope} != closed form {report.closed_slope}")
    if report.pipeline_lyapunov != report.closed_lyapunov:
        fail.append(f"2 deg lambda {report.pipeline_lyapunov} != closed form {report.closed_lyapunov}")
    if cyclic_genus(spec) != genus_of_profile(r.profile()):
        fail.append("closed-form genus disagrees with the profile genus")
    report.passed = not fail
    return report
