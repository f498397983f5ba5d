"""Brute-force reference computations.

Everything here works on plain 0-based image tuples and deliberately avoids the
package's own composition, canonicalization and search code.
"""

from fractions import Fraction
from itertools import permutations


def mul(a, b):
    # right factor first, matching the package convention
    return tuple(a[b[i]] for i in range(len(a)))


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conj(a, t):
    return mul(t, mul(a, inv(t)))


def lengths(a):
    seen, out = set(), []
    for s in range(len(a)):
        if s in seen:
            continue
        n, x = 0, s
        while x not in seen:
            seen.add(x)
            x = a[x]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def cycle_list(a):
    seen, out = set(), []
    for s in range(len(a)):
        if s in seen:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x)
            x = a[x]
        out.append(c)
    return out


def reachable(gens, d):
    """Orbit partition by naive closure (repeat until nothing changes)."""
    comp = {x: {x} for x in range(d)}
    changed = True
    while changed:
        changed = False
        for x in range(d):
            new = set(comp[x])
            for y in comp[x]:
                for g in gens:
                    new.add(g[y])
            if new != comp[x]:
                comp[x] = new
                changed = True
    return {frozenset(s) for s in comp.values()}


def transitive(gens, d):
    return len(reachable(gens, d)) == 1


def class_elements(parts, d):
    target = tuple(sorted(parts, reverse=True))
    return [p for p in permutations(range(d)) if lengths(p) == target]


def brute_equivalent(r, s):
    d = len(r[0])
    return any(all(conj(x, t) == y for x, y in zip(r, s)) for t in permutations(range(d)))


def bfs_canonical(tup):
    """Canonical form of a transitive tuple: best BFS relabelling over all start points."""
    d = len(tup[0])
    best = None
    for start in range(d):
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for g in tup:
                y = g[x]
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
        form = tuple(tuple(label[g[order[k]]] for k in range(d)) for g in tup)
        if best is None or form < best:
            best = form
    return best


def raw_cover_classes(profile_parts, d, fix_first=True):
    """All transitive tuples with the given cycle types, deduplicated by ``bfs_canonical``.

    With ``fix_first`` the first entry ranges over one fixed element of its class
    (every class meets that slice); otherwise over the whole class.
    """
    c1, c2, c3, c4 = profile_parts
    firsts = class_elements(c1, d)
    if fix_first:
        firsts = firsts[:1]
    seconds = class_elements(c2, d)
    thirds = class_elements(c3, d)
    target = tuple(sorted(c4, reverse=True))
    classes = {}
    for g1 in firsts:
        for g2 in seconds:
            p12 = mul(g1, g2)
            for g3 in thirds:
                g4 = inv(mul(p12, g3))
                if lengths(g4) != target:
                    continue
                tup = (g1, g2, g3, g4)
                if not transitive(tup, d):
                    continue
                classes.setdefault(bfs_canonical(tup), tup)
    return list(classes.values())


def node_weight_sum(tup):
    """delta' summed over the three directions, from cycle lengths of the node permutations."""
    g1, g2, g3, g4 = tup
    total = Fraction(0)
    for node in (mul(g3, g4), mul(g2, g3), mul(g2, g4)):
        total += sum(Fraction(1, n) for n in lengths(node))
    return total


def expand_power(coeffs, g):
    """Dict-of-monomials expansion of (1 + sum c_i t_i)^g; keys are exponent tuples."""
    m = len(coeffs)
    poly = {(0,) * m: 1}
    base = {(0,) * m: 1}
    for i, c in enumerate(coeffs):
        e = [0] * m
        e[i] = 1
        base[tuple(e)] = c
    for _ in range(g):
        new = {}
        for k1, v1 in poly.items():
            for k2, v2 in base.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                new[k] = new.get(k, 0) + v1 * v2
        poly = new
    return poly
