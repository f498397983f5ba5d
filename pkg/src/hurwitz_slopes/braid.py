"""Monodromy of the moving branch point and the resulting orbit decomposition.

Each orbit of the two moves on isomorphism classes is one irreducible
component of the Hurwitz space.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .hurwitz import CoverSet, MonodromyTuple, RamificationProfile, _canonical_imgs
from .perm import _compose, _conjugate, _inverse


@dataclass(frozen=True)
class Orbit:
    profile: RamificationProfile
    members: tuple[MonodromyTuple, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[MonodromyTuple]:
        return iter(self.members)

    def __contains__(self, r: MonodromyTuple) -> bool:
        key = _canonical_imgs(r._imgs())
        return any(m._imgs() == key for m in self.members)


def _g1(t):
    g1, g2, g3, g4 = t
    g34 = _compose(g3, g4)
    # x^-1 y x is y conjugated by x^-1
    return (g1, g2, _conjugate(g3, _inverse(g4)), _conjugate(g4, _inverse(g34)))


def _g2(t):
    g1, g2, g3, g4 = t
    g4i = _inverse(g4)
    g234 = _compose(g2, _compose(g3, g4))
    return (g1, _conjugate(g2, g4i), _conjugate(g3, g4i), _conjugate(g4, _inverse(g234)))


def act_g1(r: MonodromyTuple) -> MonodromyTuple:
    """p4 loops around p3: (g1, g2, g4^-1 g3 g4, (g3 g4)^-1 g4 (g3 g4))."""
    return MonodromyTuple._raw(_g1(r._imgs()))


def act_g2(r: MonodromyTuple) -> MonodromyTuple:
    """p4 loops around p2 and p3: (g1, g4^-1 g2 g4, g4^-1 g3 g4, (g2 g3 g4)^-1 g4 (g2 g3 g4))."""
    return MonodromyTuple._raw(_g2(r._imgs()))


def _closure(start):
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for move in (_g1, _g2):
            nxt = _canonical_imgs(move(t))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def orbit_of(r: MonodromyTuple) -> Orbit:
    """The orbit containing ``r``, without enumerating the whole cover set."""
    members = sorted(_closure(_canonical_imgs(r._imgs())))
    return Orbit(r.profile(), tuple(MonodromyTuple._raw(m) for m in members))


def orbit_decompose(s: CoverSet) -> list[Orbit]:
    """Split a cover set into orbits, ordered by smallest member."""
    remaining = {r._imgs() for r in s.representatives}
    orbits = []
    for r in s.representatives:
        key = r._imgs()
        if key not in remaining:
            continue
        members = _closure(key)
        stray = members - remaining
        if stray:
            raise RuntimeError(f"braid move left the cover set from {r}")
        remaining -= members
        orbits.append(Orbit(s.profile, tuple(MonodromyTuple._raw(m) for m in sorted(members))))
    orbits.sort(key=lambda o: o.members[0].key())
    return orbits
