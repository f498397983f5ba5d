import pytest
from hypothesis import given

from conftest import monodromy_tuples
from hurwitz_slopes.braid import act_g1, act_g2, orbit_decompose, orbit_of
from hurwitz_slopes.hurwitz import MonodromyTuple, RamificationProfile, canonicalize, enumerate_covers
from hurwitz_slopes.perm import Permutation, compose, cycle_type, inverse

EX14 = RamificationProfile.of((4,), (4,), (3, 1), (3, 1))


def _product(r):
    g1, g2, g3, g4 = r
    return compose(g1, compose(g2, compose(g3, g4)))


def test_moves_written_out():
    g1, g2, g3, g4 = MonodromyTuple.from_cycles([[(1, 2, 3, 4)], [(1, 3, 2, 4)], [(1, 2, 3)], [(2, 4, 3)]], 4)
    g34 = g3 * g4
    assert act_g1(MonodromyTuple([g1, g2, g3, g4])).entries == (g1, g2, ~g4 * g3 * g4, ~g34 * g4 * g34)
    g234 = g2 * g34
    assert act_g2(MonodromyTuple([g1, g2, g3, g4])).entries == (
        g1, ~g4 * g2 * g4, ~g4 * g3 * g4, ~g234 * g4 * g234
    )


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_inverse_pair_cyclic_tuple_is_fixed(d):
    g = Permutation([(x % d) + 1 for x in range(1, d + 1)])
    r = MonodromyTuple([g, inverse(g), g, inverse(g)])
    assert act_g1(r) == r
    assert canonicalize(act_g2(r)) == canonicalize(r)
    assert orbit_of(r).size == 1


@given(monodromy_tuples(max_degree=8))
def test_moves_preserve_product_types_and_transitivity(r):
    for move in (act_g1, act_g2):
        s = move(r)
        assert _product(s).is_identity()
        assert [cycle_type(p) for p in s] == [cycle_type(p) for p in r]
        assert s.is_transitive() == r.is_transitive()


def test_example_orbit_has_six_classes(example_orbit_tuples):
    o = orbit_of(example_orbit_tuples[0])
    assert o.size == 6
    assert all(r in o for r in example_orbit_tuples)


def test_example_profile_orbits():
    orbits = orbit_decompose(enumerate_covers(EX14))
    assert [o.size for o in orbits] == [6, 2]


def test_degree2_single_orbit():
    orbits = orbit_decompose(enumerate_covers(RamificationProfile.of((2,), (2,), (2,), (2,))))
    assert [o.size for o in orbits] == [1]


@pytest.mark.parametrize(
    "parts",
    [((4,), (4,), (3, 1), (3, 1)), ((3, 2), (2, 2, 1), (4, 1), (3, 1, 1)), ((4, 2), (2, 2, 2), (2, 2, 2), (2, 2, 2))],
)
def test_moves_permute_cover_set(parts):
    cs = enumerate_covers(RamificationProfile.of(*parts))
    reps = set(cs.representatives)
    for move in (act_g1, act_g2):
        image = [canonicalize(move(r)) for r in cs]
        assert set(image) == reps
        assert len(set(image)) == len(image)
    orbits = orbit_decompose(cs)
    assert sum(o.size for o in orbits) == cs.count
    members = [m for o in orbits for m in o]
    assert len(set(members)) == len(members)
