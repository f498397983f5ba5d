"""Permutations of {1..d} and their cycle structure.

Products follow the right-to-left convention: ``compose(p, q)`` applies ``q``
first, so ``compose(p, q)(x) == p(q(x))``.  Points are 1-based in every public
surface; internally images are kept as a 0-based tuple for speed.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from itertools import product as _itproduct
from typing import Iterable, Iterator, Sequence

DEGREE_CAP = 64


class DegreeMismatch(ValueError):
    pass


class Permutation:
    """An immutable bijection of {1..d}."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(x) - 1 for x in images)
        d = len(img)
        if d < 1:
            raise ValueError("permutation degree must be at least 1")
        if sorted(img) != list(range(d)):
            raise ValueError(f"not a bijection of {{1..{d}}}: {tuple(images)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        # trusted 0-based constructor, skips validation
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls._raw(tuple(range(d)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears in more than one cycle")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    def __call__(self, x: int) -> int:
        return self._img[x - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, ordered by that point."""
        return [
            tuple(x + 1 for x in c)
            for c in _cycles(self._img)
            if include_fixed or len(c) > 1
        ]

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r}, degree={self.degree})"


def _cycles(img: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(img)
    out = []
    for start in range(len(img)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = img[x]
        out.append(cyc)
    return out


# small degrees revisit the same few hundred permutations constantly, so these two are memoized
@lru_cache(maxsize=1 << 16)
def _cycle_lengths(img: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(img)
    lengths = []
    for start in range(len(img)):
        if seen[start]:
            continue
        n = 0
        x = start
        while not seen[x]:
            seen[x] = True
            n += 1
            x = img[x]
        lengths.append(n)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple([a[x] for x in b])


def _inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _conjugate(a: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    # t a t^-1 : t(x) -> t(a(x))
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[t[i]] = t[x]
    return tuple(out)


def _check_same_degree(*perms: Permutation) -> None:
    d = perms[0].degree
    for p in perms[1:]:
        if p.degree != d:
            raise DegreeMismatch(f"degree mismatch: {d} vs {p.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``: apply ``q`` first, then ``p``."""
    _check_same_degree(p, q)
    return Permutation._raw(_compose(p._img, q._img))


def inverse(p: Permutation) -> Permutation:
    return Permutation._raw(_inverse(p._img))


def conjugate(p: Permutation, t: Permutation) -> Permutation:
    """Return ``t p t^-1``, i.e. ``p`` with its points relabelled by ``t``."""
    _check_same_degree(p, t)
    return Permutation._raw(_conjugate(p._img, t._img))


@dataclass(frozen=True, order=True)
class CycleType:
    """A partition of d, stored weakly decreasing; fixed points are parts of size 1."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(x) for x in self.parts), reverse=True))
        if not parts or any(x < 1 for x in parts):
            raise ValueError(f"invalid cycle type {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> CycleType:
        return cls(tuple(parts))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def num_cycles(self) -> int:
        return len(self.parts)

    def centralizer_order(self) -> int:
        return math.prod(k**m * math.factorial(m) for k, m in Counter(self.parts).items())

    def class_size(self) -> int:
        return math.factorial(self.degree) // self.centralizer_order()

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(_cycle_lengths(p._img))


def orbits_under(generators: Sequence[Permutation], d: int) -> list[frozenset[int]]:
    """Partition {1..d} into orbits of the group generated by ``generators``.

    Orbits are listed by smallest element.
    """
    for g in generators:
        if g.degree != d:
            raise DegreeMismatch(f"generator of degree {g.degree} in S_{d}")
    return [frozenset(x + 1 for x in orb) for orb in _orbits([g._img for g in generators], d)]


def _orbits(gens: Sequence[tuple[int, ...]], d: int) -> list[list[int]]:
    label = [-1] * d
    out = []
    for start in range(d):
        if label[start] >= 0:
            continue
        k = len(out)
        label[start] = k
        orb = [start]
        i = 0
        while i < len(orb):
            x = orb[i]
            i += 1
            for g in gens:
                y = g[x]
                if label[y] < 0:
                    label[y] = k
                    orb.append(y)
        orb.sort()
        out.append(orb)
    return out


def _is_transitive(gens: Sequence[tuple[int, ...]], d: int) -> bool:
    seen = [False] * d
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == d


def _blocks(ct: CycleType) -> list[list[int]]:
    blocks = []
    start = 0
    for k in ct.parts:
        blocks.append(list(range(start, start + k)))
        start += k
    return blocks


def cycle_types(d: int) -> list[CycleType]:
    """Every cycle type of degree ``d``, identity last."""
    out: list[tuple[int, ...]] = []

    def grow(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rest, cap), 0, -1):
            grow(rest - k, k, acc + [k])

    grow(d, d, [])
    return [CycleType(p) for p in out]


@lru_cache(maxsize=None)
def _class_rep(ct: CycleType) -> tuple[int, ...]:
    img = [0] * ct.degree
    for blk in _blocks(ct):
        for j, x in enumerate(blk):
            img[x] = blk[(j + 1) % len(blk)]
    return tuple(img)


def canonical_class_rep(ct: CycleType) -> Permutation:
    """Consecutive blocks, longest cycles first: (3,1) gives (1 2 3)(4)."""
    return Permutation._raw(_class_rep(ct))


@lru_cache(maxsize=64)
def _centralizer(ct: CycleType) -> tuple[tuple[int, ...], ...]:
    """All elements commuting with the canonical representative of ``ct``, sorted."""
    blocks = _blocks(ct)
    groups: dict[int, list[int]] = {}
    for i, blk in enumerate(blocks):
        groups.setdefault(len(blk), []).append(i)
    # per cycle length: every permutation of the equal-length blocks times every rotation
    choices = []
    for k, idx in groups.items():
        opts = []
        for perm in _itperms(idx):
            for rots in _itproduct(range(k), repeat=len(idx)):
                opts.append((idx, perm, rots))
        choices.append(opts)
    out = []
    for combo in _itproduct(*choices):
        z = [0] * ct.degree
        for idx, perm, rots in combo:
            for src, dst, r in zip(idx, perm, rots):
                sb, db = blocks[src], blocks[dst]
                k = len(sb)
                for j in range(k):
                    z[sb[j]] = db[(j + r) % k]
        out.append(tuple(z))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=256)
def _rep_of_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    return _class_rep(CycleType(parts))


@lru_cache(maxsize=64)
def _centralizer_pairs(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """(z, z^-1) for every z in ``_centralizer``, same order; keyed by the parts tuple."""
    return tuple((z, _inverse(z)) for z in _centralizer(CycleType(parts)))


@lru_cache(maxsize=1 << 16)
def _conjugator_to_rep(img: tuple[int, ...]) -> tuple[int, ...]:
    """Some ``t`` with ``t img t^-1`` equal to the canonical class representative."""
    cycs = _cycles(img)
    cycs.sort(key=len, reverse=True)  # stable: ties keep smallest-point order
    t = [0] * len(img)
    pos = 0
    for cyc in cycs:
        for j, x in enumerate(cyc):
            t[x] = pos + j
        pos += len(cyc)
    return tuple(t)


def iter_class(ct: CycleType) -> Iterator[Permutation]:
    """Every permutation with cycle type ``ct`` (0-based generation, deterministic order)."""
    for img in _iter_class(ct):
        yield Permutation._raw(img)


def _iter_class(ct: CycleType) -> Iterator[tuple[int, ...]]:
    d = ct.degree
    counts = Counter(ct.parts)
    img = [-1] * d

    def rec(remaining: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(img)
            return
        first = remaining[0]
        rest = remaining[1:]
        for k in sorted(counts):
            if counts[k] == 0:
                continue
            counts[k] -= 1
            for others in _itperms(rest, k - 1):
                cyc = (first,) + others
                for j in range(k):
                    img[cyc[j]] = cyc[(j + 1) % k]
                left = [x for x in rest if x not in others]
                yield from rec(left)
            counts[k] += 1

    yield from rec(list(range(d)))


def format_permutation(p: Permutation) -> str:
    cyc = p.cycles(include_fixed=False)
    if not cyc:
        return "id"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
