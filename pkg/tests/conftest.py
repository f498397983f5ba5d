import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hurwitz_slopes.hurwitz import MonodromyTuple
from hurwitz_slopes.perm import Permutation, compose, inverse

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def perms(d):
    return st.permutations(range(1, d + 1)).map(Permutation)


@st.composite
def monodromy_tuples(draw, min_degree=1, max_degree=8):
    d = draw(st.integers(min_degree, max_degree))
    g1, g2, g3 = (draw(perms(d)) for _ in range(3))
    g4 = inverse(compose(g1, compose(g2, g3)))
    return MonodromyTuple([g1, g2, g3, g4])


def cyc(*cycles, d):
    return Permutation.from_cycles(cycles, d)


# the six tuples listed for the degree-4, genus-2 example
EXAMPLE_ORBIT = [
    [[(1, 2, 3, 4)], [(1, 4, 3, 2)], [(1, 2, 3)], [(1, 3, 2)]],
    [[(1, 2, 3, 4)], [(1, 4, 3, 2)], [(1, 3, 2)], [(1, 2, 3)]],
    [[(1, 2, 3, 4)], [(1, 3, 2, 4)], [(1, 2, 3)], [(2, 4, 3)]],
    [[(1, 2, 3, 4)], [(1, 3, 2, 4)], [(1, 3, 4)], [(1, 2, 3)]],
    [[(1, 2, 3, 4)], [(1, 3, 2, 4)], [(2, 4, 3)], [(1, 3, 4)]],
    [[(1, 2, 3, 4)], [(1, 2, 3, 4)], [(1, 2, 3)], [(1, 2, 4)]],
]


@pytest.fixture
def example_orbit_tuples():
    return [MonodromyTuple.from_cycles(c, 4) for c in EXAMPLE_ORBIT]
