from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from conftest import monodromy_tuples
from hurwitz_slopes.degen import degenerate, is_connected, node_permutation, side_tuples
from hurwitz_slopes.hurwitz import MonodromyTuple, genus_of_profile
from hurwitz_slopes.perm import Permutation, compose, cycle_type, inverse


def _cyclic(d, a):
    return MonodromyTuple([Permutation([(x + k) % d + 1 for x in range(d)]) for k in a])


def test_node_permutation_examples(example_orbit_tuples):
    r1, r6 = example_orbit_tuples[0], example_orbit_tuples[5]
    assert node_permutation(r1, 3).is_identity()
    assert str(node_permutation(r6, 3)) == "(1 3)(2 4)"
    with pytest.raises(ValueError):
        node_permutation(r1, 4)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_inverse_pair_direction2_is_one_cycle(d):
    r = _cyclic(d, (1, d - 1, 1, d - 1))
    g = r[0]
    assert node_permutation(r, 2) == inverse(compose(g, g))
    assert cycle_type(node_permutation(r, 2)).parts == (d,)


@given(monodromy_tuples(max_degree=8), st.sampled_from([1, 2, 3]))
def test_side_triples_close_up(r, j):
    a, b = side_tuples(r, j)
    for x, y, z in (a, b):
        assert compose(x, compose(y, z)).is_identity()
    assert compose(a[2], b[2]).is_identity()
    n = node_permutation(r, j)
    assert a[2] in (n, inverse(n))


def test_example_first_tuple_direction3(example_orbit_tuples):
    rep = degenerate(example_orbit_tuples[0], 3)
    assert [n.multiplicity for n in rep.nodes] == [1, 1, 1, 1]
    a = [c for c in rep.components if c.side == "A"]
    b = sorted((c for c in rep.components if c.side == "B"), key=lambda c: -c.node_count)
    assert [(c.genus, c.node_count) for c in a] == [(0, 4)]
    assert [(c.genus, c.node_count) for c in b] == [(0, 3), (0, 1)]
    assert rep.delta_prime == 4 and rep.delta == 3
    assert rep.rational_tails == 1


def test_example_third_tuple_has_a_bridge(example_orbit_tuples):
    rep = degenerate(example_orbit_tuples[2], 3)
    assert sorted(n.multiplicity for n in rep.nodes) == [1, 3]
    assert [(c.side, c.genus, c.node_count) for c in rep.components] == [("A", 1, 2), ("B", 0, 2)]
    assert rep.delta == rep.delta_prime == Fraction(4, 3)
    assert rep.bridge_chains == 0


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_inverse_pair_weights(d):
    r = _cyclic(d, (1, d - 1, 1, d - 1))
    for j in (1, 3):
        rep = degenerate(r, j)
        assert len(rep.nodes) == d and rep.delta == rep.delta_prime == d
    rep = degenerate(r, 2)
    assert len(rep.nodes) == 1 and rep.delta == rep.delta_prime == Fraction(1, d)
    assert [c.genus for c in rep.components] == [(d - 1) // 2] * 2


def test_bridge_chain_is_flagged():
    r = MonodromyTuple.from_cycles(
        [[(1, 2, 3), (4, 5)], [(1, 2, 4), (3, 5)], [(1, 4, 2), (3, 5)], [(1, 3, 2), (4, 5)]], 5
    )
    rep = degenerate(r, 1)
    assert rep.bridge_chains > 0
    assert any("chain" in w for w in rep.warnings)
    assert rep.delta == rep.delta_prime


def test_low_genus_warning():
    t = Permutation([2, 1])
    rep = degenerate(MonodromyTuple([t, t, t, t]), 3)
    assert rep.arithmetic_genus == 1
    assert rep.delta == rep.delta_prime == 2
    assert rep.warnings


@given(monodromy_tuples(min_degree=2, max_degree=8), st.sampled_from([1, 2, 3]))
def test_degeneration_invariants(r, j):
    assume(r.is_transitive())
    rep = degenerate(r, j)
    assert rep.arithmetic_genus == genus_of_profile(r.profile())
    assert is_connected(rep)
    assert rep.delta <= rep.delta_prime
    assert (rep.delta == rep.delta_prime) == (rep.rational_tails == 0)
    for side in "AB":
        assert sum(c.degree for c in rep.components if c.side == side) == r.degree
    assert sum(n.multiplicity for n in rep.nodes) == r.degree


@pytest.mark.parametrize("d", range(2, 9))
def test_cyclic_direction3_weight(d):
    for a1 in range(1, d):
        for a2 in range(1, d):
            for a3 in range(1, d):
                a4 = (-(a1 + a2 + a3)) % d
                if a4 == 0 or gcd(gcd(a1, a2), gcd(gcd(a3, a4), d)) != 1:
                    continue
                rep = degenerate(_cyclic(d, (a1, a2, a3, a4)), 3)
                assert rep.delta_prime == Fraction(gcd(a1 + a2, d) ** 2, d)
