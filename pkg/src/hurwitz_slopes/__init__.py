"""Exact invariants of one-dimensional Hurwitz spaces of covers of P^1 branched at four points."""

from .braid import Orbit, act_g1, act_g2, orbit_decompose, orbit_of
from .cyclic import (
    CyclicCoverSpec,
    cyclic_cross_check,
    cyclic_genus,
    cyclic_lyapunov_sum,
    cyclic_slope,
    cyclic_tuple,
    degree_bound_check,
)
from .degen import DegenerationReport, degenerate, node_permutation, side_tuples
from .hurwitz import (
    CoverSet,
    MonodromyTuple,
    RamificationProfile,
    canonicalize,
    enumerate_covers,
    enumerate_degree,
    equivalent,
    genus_of_profile,
)
from .invariants import SlopeReport, delta_sums, slope, slope_of_space
from .perm import (
    CycleType,
    Permutation,
    canonical_class_rep,
    compose,
    conjugate,
    cycle_type,
    cycle_types,
    inverse,
    orbits_under,
)
from .qdiff import (
    OddPartition,
    asymptotic_bound,
    de_jonquieres_count,
    kappa,
    stratum_profile,
    stratum_scan,
    sv_lyapunov_relation,
)

__version__ = "0.1.0"
