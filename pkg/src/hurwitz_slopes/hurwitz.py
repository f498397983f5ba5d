"""Covers of P^1 branched over four points, as monodromy tuples up to relabelling."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import (
    DEGREE_CAP,
    CycleType,
    Permutation,
    _centralizer,
    _centralizer_pairs,
    _rep_of_parts,
    _class_rep,
    _compose,
    _conjugate,
    _conjugator_to_rep,
    _cycle_lengths,
    _inverse,
    _is_transitive,
    _iter_class,
    compose,
    cycle_type,
    cycle_types,
)

log = logging.getLogger(__name__)

# position 1 stays the anchor unless another entry's centralizer is this many times smaller
ANCHOR_SLACK = 4


class InfeasibleProfile(ValueError):
    pass


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    classes: tuple[CycleType, CycleType, CycleType, CycleType]

    def __post_init__(self):
        classes = tuple(c if isinstance(c, CycleType) else CycleType(tuple(c)) for c in self.classes)
        if len(classes) != 4:
            raise ValueError("a profile has exactly four cycle types")
        for c in classes:
            if c.degree != self.degree:
                raise ValueError(f"cycle type {c} does not partition {self.degree}")
        if not 1 <= self.degree <= DEGREE_CAP:
            raise ValueError(f"degree {self.degree} outside 1..{DEGREE_CAP}")
        object.__setattr__(self, "classes", classes)

    @classmethod
    def of(cls, *classes: Sequence[int]) -> RamificationProfile:
        cts = tuple(CycleType(tuple(c)) for c in classes)
        return cls(cts[0].degree, cts)

    @property
    def parity_ok(self) -> bool:
        return sum(self.degree - c.num_cycles for c in self.classes) % 2 == 0

    def ramification_defect(self) -> Fraction:
        """d minus the sum of 1/a over every cycle of every class."""
        return self.degree - sum(Fraction(1, a) for c in self.classes for a in c.parts)

    def __str__(self) -> str:
        return "|".join(str(c) for c in self.classes)


def genus_of_profile(c: RamificationProfile) -> int:
    """Riemann-Hurwitz genus d + 1 - (k1+k2+k3+k4)/2; may be negative."""
    if not c.parity_ok:
        raise InfeasibleProfile(f"profile {c} has odd total ramification")
    return c.degree + 1 - sum(k.num_cycles for k in c.classes) // 2


class MonodromyTuple:
    """Four permutations of common degree whose product g1 g2 g3 g4 is the identity."""

    # image arrays are the primary data; Permutation objects are built on first access
    __slots__ = ("_t", "_entries", "_hash")

    def __init__(self, entries: Sequence[Permutation]):
        entries = tuple(entries)
        if len(entries) != 4:
            raise ValueError("a monodromy tuple has exactly four entries")
        d = entries[0].degree
        if any(p.degree != d for p in entries):
            raise ValueError("entries of a monodromy tuple must share a degree")
        g1, g2, g3, g4 = entries
        if not compose(g1, compose(g2, compose(g3, g4))).is_identity():
            raise ValueError("product g1 g2 g3 g4 is not the identity")
        self._t = tuple(p._img for p in entries)
        self._entries = entries
        self._hash = hash(self._t)

    @classmethod
    def _raw(cls, imgs: Sequence[tuple[int, ...]]) -> MonodromyTuple:
        r = object.__new__(cls)
        r._t = tuple(imgs)
        r._entries = None
        r._hash = hash(r._t)
        return r

    @property
    def entries(self) -> tuple[Permutation, ...]:
        if self._entries is None:
            self._entries = tuple(Permutation._raw(x) for x in self._t)
        return self._entries

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[Sequence[int]]], degree: int) -> MonodromyTuple:
        return cls([Permutation.from_cycles(c, degree) for c in cycles])

    @property
    def degree(self) -> int:
        return len(self._t[0])

    def _imgs(self) -> tuple[tuple[int, ...], ...]:
        return self._t

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Total order used for canonical forms: lexicographic on the image arrays."""
        return self._imgs()

    def profile(self) -> RamificationProfile:
        return RamificationProfile(self.degree, tuple(cycle_type(p) for p in self.entries))

    def is_transitive(self) -> bool:
        return _is_transitive(self._imgs(), self.degree)

    def __getitem__(self, i: int) -> Permutation:
        return self.entries[i]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.entries)

    def __len__(self) -> int:
        return 4

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonodromyTuple) and self._t == other._t

    def __lt__(self, other: MonodromyTuple) -> bool:
        return self._t < other._t

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.entries)

    def __repr__(self) -> str:
        return f"MonodromyTuple({str(self)!r}, degree={self.degree})"


def anchor_position(types: tuple[CycleType, ...]) -> int:
    return _anchor(tuple(c.parts for c in types))


@lru_cache(maxsize=4096)
def _anchor(parts: tuple[tuple[int, ...], ...]) -> int:
    sizes = [CycleType(p).centralizer_order() for p in parts]
    smallest = min(sizes)
    if sizes[0] <= ANCHOR_SLACK * smallest:
        return 0
    return sizes.index(smallest)


def _canonical_imgs(imgs: tuple[tuple[int, ...], ...], parts=None) -> tuple[tuple[int, ...], ...]:
    # parts: the four cycle-length tuples when the caller already has them
    if parts is None:
        parts = tuple(_cycle_lengths(x) for x in imgs)
    k = _anchor(parts)
    if imgs[k] == _rep_of_parts(parts[k]):
        moved = imgs
    else:
        t0 = _conjugator_to_rep(imgs[k])
        moved = [_conjugate(x, t0) for x in imgs]
    others = [moved[i] for i in range(4) if i != k]
    a, b, c = others
    best = None
    # conjugating by z is x -> z x z^-1, i.e. j -> z[x[zinv[j]]]
    for z, zi in _centralizer_pairs(parts[k]):
        ca = tuple([z[a[j]] for j in zi])
        if best is not None:
            if ca > best[0]:
                continue
            if ca == best[0]:
                cb = tuple([z[b[j]] for j in zi])
                if cb > best[1]:
                    continue
                cc = tuple([z[c[j]] for j in zi])
                if (cb, cc) >= best[1:]:
                    continue
                best = (ca, cb, cc)
                continue
        best = (ca, tuple([z[b[j]] for j in zi]), tuple([z[c[j]] for j in zi]))
    out = list(best)
    out.insert(k, moved[k])
    return tuple(out)


def canonicalize(r: MonodromyTuple) -> MonodromyTuple:
    """Deterministic representative of the simultaneous-conjugation class of ``r``.

    The anchored entry (normally the first) becomes the canonical class
    representative; among the conjugators achieving that, the lexicographically
    smallest tuple of image arrays wins.
    """
    return MonodromyTuple._raw(_canonical_imgs(r._imgs()))


def equivalent(r: MonodromyTuple, s: MonodromyTuple) -> bool:
    if r.degree != s.degree:
        raise ValueError("tuples of different degree")
    return _canonical_imgs(r._imgs()) == _canonical_imgs(s._imgs())


@dataclass(frozen=True)
class CoverSet:
    profile: RamificationProfile
    representatives: tuple[MonodromyTuple, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self) -> Iterator[MonodromyTuple]:
        return iter(self.representatives)


def _second_entry_reps(rho: tuple[int, ...], ct1: CycleType, ct2: CycleType) -> list[tuple[int, ...]]:
    """One element of c2 per orbit of the centralizer of ``rho`` acting by conjugation."""
    cent = _centralizer(ct1)
    seen: set[tuple[int, ...]] = set()
    reps = []
    for g in _iter_class(ct2):
        if g in seen:
            continue
        reps.append(g)
        for z in cent:
            seen.add(_conjugate(g, z))
    return reps


def _scan(args) -> set[tuple[tuple[int, ...], ...]]:
    rho, g2s, ct3, ct4, d = args
    target = ct4.parts
    c3 = list(_iter_class(ct3))
    types = (_cycle_lengths(rho), _cycle_lengths(g2s[0]) if g2s else (), ct3.parts, target)
    found = set()
    for g2 in g2s:
        p12 = _compose(rho, g2)
        for g3 in c3:
            g4inv = _compose(p12, g3)
            if _cycle_lengths(g4inv) != target:
                continue
            g4 = _inverse(g4inv)
            tup = (rho, g2, g3, g4)
            if not _is_transitive(tup, d):
                continue
            found.add(_canonical_imgs(tup, types))
    return found


def estimated_work(c: RamificationProfile) -> int:
    """Approximate number of (g2, g3) candidate pairs ``enumerate_covers`` will test."""
    c1, c2, c3, _ = c.classes
    return max(1, c2.class_size() // c1.centralizer_order()) * c3.class_size()


def enumerate_covers(c: RamificationProfile, workers: int | None = None) -> CoverSet:
    """All connected covers with profile ``c``, one canonical tuple per isomorphism class.

    ``workers`` > 1 splits the search over second-entry candidates across
    processes; the result is identical to the sequential run.
    """
    if not c.parity_ok or genus_of_profile(c) < 0:
        return CoverSet(c, ())
    d = c.degree
    c1, c2, c3, c4 = c.classes
    rho = _class_rep(c1)
    g2s = _second_entry_reps(rho, c1, c2)
    log.debug("profile %s: %d second-entry candidates", c, len(g2s))
    if workers and workers > 1 and len(g2s) > 1:
        chunks = [g2s[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_scan, [(rho, ch, c3, c4, d) for ch in chunks])
            found = set().union(*parts)
    else:
        found = _scan((rho, g2s, c3, c4, d))
    reps = tuple(MonodromyTuple._raw(x) for x in sorted(found))
    return CoverSet(c, reps)


def _scan_by_last(args) -> dict[tuple[int, ...], set]:
    rho, g2s, ct3, d = args
    c3 = list(_iter_class(ct3))
    rho_t, g3_t = _cycle_lengths(rho), ct3.parts
    g2_t = _cycle_lengths(g2s[0]) if g2s else ()
    found: dict[tuple[int, ...], set] = {}
    for g2 in g2s:
        p12 = _compose(rho, g2)
        for g3 in c3:
            g4inv = _compose(p12, g3)
            tup = (rho, g2, g3, _inverse(g4inv))
            if not _is_transitive(tup, d):
                continue
            last = _cycle_lengths(g4inv)
            found.setdefault(last, set()).add(_canonical_imgs(tup, (rho_t, g2_t, g3_t, last)))
    return found


def enumerate_degree(d: int, workers: int | None = None) -> dict[RamificationProfile, CoverSet]:
    """``enumerate_covers`` for every profile of degree ``d`` at once.

    One scan per (c1, c2, c3) is shared by all choices of c4.  Every profile
    appears as a key, with an empty ``CoverSet`` where there are no covers.
    """
    types = cycle_types(d)
    jobs, keys = [], []
    for c1 in types:
        rho = _class_rep(c1)
        for c2 in types:
            g2s = _second_entry_reps(rho, c1, c2)
            for c3 in types:
                jobs.append((rho, g2s, c3, d))
                keys.append((c1, c2, c3))
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_scan_by_last, jobs, chunksize=8))
    else:
        results = [_scan_by_last(j) for j in jobs]
    out = {}
    for (c1, c2, c3), found in zip(keys, results):
        for c4 in types:
            prof = RamificationProfile(d, (c1, c2, c3, c4))
            reps = found.get(c4.parts, ())
            out[prof] = CoverSet(prof, tuple(MonodromyTuple._raw(x) for x in sorted(reps)))
    return out
