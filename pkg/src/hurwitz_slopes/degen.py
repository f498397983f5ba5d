"""Admissible-cover degenerations when the moving point p4 collides with p1, p2 or p3.

The nodal fibre is read off from the monodromy: nodes are the cycles of the
vanishing-cycle permutation, components are orbits of the two surviving branch
permutations on each side, and stabilization decides which nodes count toward
the boundary class.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .hurwitz import MonodromyTuple
from .perm import Permutation, _cycle_lengths, _cycles, _orbits, compose, conjugate, inverse

DIRECTIONS = (1, 2, 3)


class InvariantViolation(RuntimeError):
    """Internal consistency failure (never a user error)."""


@dataclass(frozen=True)
class NodeRecord:
    cycle_support: frozenset[int]
    multiplicity: int
    survives: bool
    side_a: int
    side_b: int

    @property
    def weight(self) -> Fraction:
        return Fraction(1, self.multiplicity)


@dataclass(frozen=True)
class ComponentRecord:
    side: str
    letters: frozenset[int]
    genus: int
    node_count: int

    @property
    def degree(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class DegenerationReport:
    tuple: MonodromyTuple
    direction: int
    node_permutation: Permutation
    nodes: tuple[NodeRecord, ...]
    components: tuple[ComponentRecord, ...]
    delta: Fraction
    delta_prime: Fraction
    arithmetic_genus: int
    rational_tails: int
    bridge_chains: int
    warnings: tuple[str, ...] = field(default=())

    @property
    def has_rational_tail(self) -> bool:
        return self.rational_tails > 0


def _check_direction(j: int) -> None:
    if j not in DIRECTIONS:
        raise ValueError(f"direction must be 1, 2 or 3, got {j!r}")


def node_permutation(r: MonodromyTuple, j: int) -> Permutation:
    """Monodromy of the vanishing cycle: g2 g3 (j=1), g2 g4 (j=2), g3 g4 (j=3)."""
    _check_direction(j)
    g1, g2, g3, g4 = r.entries
    if j == 3:
        return compose(g3, g4)
    if j == 1:
        return compose(g2, g3)
    return compose(g2, g4)


def side_tuples(r: MonodromyTuple, j: int):
    """Branch data (x, y, (xy)^-1) of the two sides of the degenerate target."""
    _check_direction(j)
    g1, g2, g3, g4 = r.entries
    if j == 3:
        a, b = (g1, g2), (g3, g4)
    elif j == 1:
        a, b = (g2, g3), (g4, g1)
    else:
        a, b = (g2, g4), (conjugate(g3, inverse(g4)), g1)
    return (
        (a[0], a[1], inverse(compose(*a))),
        (b[0], b[1], inverse(compose(*b))),
    )


def _rh_genus(perms, letters) -> int:
    n = len(letters)
    sub = sorted(letters)
    ram = 0
    for p in perms:
        seen = set()
        cycles = 0
        for x in sub:
            if x in seen:
                continue
            cycles += 1
            while x not in seen:
                seen.add(x)
                x = p._img[x]
        ram += n - cycles
    twice = ram - 2 * n + 2
    if twice < 0 or twice % 2:
        raise InvariantViolation(f"Riemann-Hurwitz genus {twice}/2 on letters {sub}")
    return twice // 2


def _weight_sum(mults) -> Fraction:
    """Sum of 1/a over the given multiplicities, as one exact fraction."""
    mults = list(mults)
    if not mults:
        return Fraction(0)
    den = math.lcm(*mults)
    return Fraction(sum(den // a for a in mults), den)


def degenerate(r: MonodromyTuple, j: int) -> DegenerationReport:
    d = r.degree
    node_perm = node_permutation(r, j)
    side_a, side_b = side_tuples(r, j)

    comps = []  # (side, letters 0-based, genus)
    owner_a = [0] * d
    owner_b = [0] * d
    for side, triple, owner in (("A", side_a, owner_a), ("B", side_b, owner_b)):
        for orb in _orbits([triple[0]._img, triple[1]._img], d):
            idx = len(comps)
            for x in orb:
                owner[x] = idx
            comps.append((side, orb, _rh_genus(triple, orb)))

    node_cycles = _cycles(node_perm._img)
    edges = [(owner_a[c[0]], owner_b[c[0]]) for c in node_cycles]
    for c, (va, vb) in zip(node_cycles, edges):
        if any(owner_a[x] != va or owner_b[x] != vb for x in c):
            raise InvariantViolation("node cycle straddles two components")

    # prune rational tails; contracting genus-0 bridges never changes survival
    valence = Counter()
    for va, vb in edges:
        valence[va] += 1
        valence[vb] += 1
    alive_edge = [True] * len(edges)
    alive_vertex = [True] * len(comps)
    tails = 0
    changed = True
    while changed:
        changed = False
        for v, (_, _, genus) in enumerate(comps):
            if alive_vertex[v] and genus == 0 and valence[v] == 1:
                e = next(i for i, uv in enumerate(edges) if alive_edge[i] and v in uv)
                alive_edge[e] = False
                alive_vertex[v] = False
                for u in edges[e]:
                    valence[u] -= 1
                tails += 1
                changed = True

    bridges = {
        v for v, (_, _, genus) in enumerate(comps)
        if alive_vertex[v] and genus == 0 and valence[v] == 2
    }
    chains = sum(
        1 for i, (va, vb) in enumerate(edges)
        if alive_edge[i] and va in bridges and vb in bridges
    )

    nodes = tuple(
        NodeRecord(
            cycle_support=frozenset(x + 1 for x in c),
            multiplicity=len(c),
            survives=alive_edge[i],
            side_a=edges[i][0],
            side_b=edges[i][1],
        )
        for i, c in enumerate(node_cycles)
    )
    components = tuple(
        ComponentRecord(side, frozenset(x + 1 for x in orb), genus, sum(v in e for e in edges))
        for v, (side, orb, genus) in enumerate(comps)
    )
    delta_prime = _weight_sum(len(c) for c in node_cycles)
    delta = _weight_sum(len(c) for i, c in enumerate(node_cycles) if alive_edge[i])
    arith = sum(c[2] for c in comps) + len(nodes) - len(comps) + 1

    warnings = []
    # Riemann-Hurwitz genus of the whole cover, straight from the cycle counts
    g = d + 1 - sum(len(_cycle_lengths(x)) for x in r._imgs()) // 2
    if arith != g:
        raise InvariantViolation(f"arithmetic genus {arith} != profile genus {g}")
    if g < 2:
        warnings.append(f"genus {g} < 2: boundary weights are formal")
    if chains:
        warnings.append("chain of genus-0 bridges: every chain node counted as surviving")

    return DegenerationReport(
        tuple=r,
        direction=j,
        node_permutation=node_perm,
        nodes=nodes,
        components=components,
        delta=delta,
        delta_prime=delta_prime,
        arithmetic_genus=arith,
        rational_tails=tails,
        bridge_chains=chains,
        warnings=tuple(warnings),
    )


def is_connected(report: DegenerationReport) -> bool:
    """Whether the dual graph (components joined by nodes) is connected."""
    n = len(report.components)
    adj = {v: set() for v in range(n)}
    for node in report.nodes:
        adj[node.side_a].add(node.side_b)
        adj[node.side_b].add(node.side_a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v] - seen:
            seen.add(u)
            stack.append(u)
    return len(seen) == n
