"""Tail sets, the pseudometric, its axioms, and the window oracle for it."""

import math
from fractions import Fraction as F
from random import Random

import pytest
from hypothesis import given, settings

from asymcenter import (
    EUCLID,
    L1,
    SUP,
    KindMismatchError,
    Norm,
    RepresentableSeq,
    SpaceKind,
    canonical_center,
    center_box,
    cluster_set,
    coordinate_envelopes,
    forward,
    smallest_enclosing_ball,
    tail_pseudometric,
    tail_pseudometric_bounds,
    tail_set,
)
from asymcenter.sampling import equivalent_pair, random_polyhedral_norm, random_seq
from asymcenter.tail_metric import chebyshev_radius, sup_distance_profile

from conftest import seqs_st
from test_sequences import sup_seq, spike_seq


def euclid_seq(cycle, pre=()):
    dim = len(cycle[0])
    return RepresentableSeq(SpaceKind.EUCLIDEAN, dim,
                            tuple(tuple(F(x) for x in v) for v in pre),
                            tuple(tuple(F(x) for x in v) for v in cycle))


PAPER_X = euclid_seq([(-1, 0), (1, 0)])
PAPER_Y = euclid_seq([(0, -1), (0, 1)])


# --- tail sets ---------------------------------------------------------------

def test_tail_set_constant():
    seq = sup_seq([], [(4,)])
    for n in (1, 2, 7):
        assert tail_set(seq, n).points == ((F(4),),)


def test_tail_set_preperiod_suffix():
    seq = sup_seq([(0,)], [(1,), (2,)])
    assert set(tail_set(seq, 1).points) == {(F(0),), (F(1),), (F(2),)}
    assert set(tail_set(seq, 2).points) == {(F(1),), (F(2),)}


def test_tail_set_stabilizes_to_cycle():
    seq = sup_seq([(9,), (8,)], [(1,), (2,)])
    stable = tail_set(seq, 3).points
    for n in range(3, 10):
        assert tail_set(seq, n).points == stable
    assert set(stable) == {(F(1),), (F(2),)}


def test_tail_sets_nested():
    seq = sup_seq([(9,), (8,)], [(1,), (2,)])
    for n in range(1, 8):
        assert set(tail_set(seq, n + 1).points) <= set(tail_set(seq, n).points)


# --- the pseudometric ----------------------------------------------------------

def test_distance_to_shift_is_zero():
    seq = sup_seq([(7, 7)], [(1, 0), (0, 1), (2, 2)])
    assert tail_pseudometric(seq, forward(seq)) == 0


def test_paper_pair_distance_sqrt2():
    d = tail_pseudometric(PAPER_X, PAPER_Y, EUCLID)
    assert abs(d - math.sqrt(2)) <= 1e-12


def test_constant_pair_distance_is_norm():
    u = sup_seq([], [(1, 5)])
    v = sup_seq([], [(4, 3)])
    assert tail_pseudometric(u, v) == 3
    assert tail_pseudometric(u, v, L1) == 5


def test_pseudometric_rejects_mixed_kinds():
    with pytest.raises(KindMismatchError):
        tail_pseudometric(sup_seq([], [(1,)]), euclid_seq([(1,)]))
    with pytest.raises(KindMismatchError):
        tail_pseudometric(spike_seq([(0,)], [1]), spike_seq([(0,)], [1]))


# --- window oracle ---------------------------------------------------------------

def test_bounds_paper_pair():
    lo, hi = tail_pseudometric_bounds(PAPER_X, PAPER_Y, 20, 10, EUCLID)
    assert lo == hi
    assert abs(lo - math.sqrt(2)) <= 1e-12


def test_bounds_identical_pair():
    seq = sup_seq([(3, 0)], [(1, 2), (0, 0)])
    assert tail_pseudometric_bounds(seq, seq, 30, 10) == (0, 0)


def test_bounds_bracket_closed_form_random():
    rng = Random(424242)
    for _ in range(200):
        kind = SpaceKind.SUP_FINITE if rng.random() < 0.5 else SpaceKind.EUCLIDEAN
        norm = SUP if kind is SpaceKind.SUP_FINITE else EUCLID
        dim = rng.randint(1, 3)
        x = random_seq(rng, kind, dim=dim)
        y = random_seq(rng, kind, dim=dim)
        d = tail_pseudometric(x, y, norm)
        lo, hi = tail_pseudometric_bounds(x, y, 400, 50, norm)
        if norm.exact:
            assert lo == d == hi
        else:
            assert lo - 1e-9 <= d <= hi + 1e-9
            assert hi - lo <= 1e-9


def test_bounds_spike_pair_brackets():
    x = spike_seq([(0,)], [1, -2], spike_pre=[5])
    y = spike_seq([(0,)], [1])
    lo, hi = tail_pseudometric_bounds(x, y, 200, 30)
    assert 0 <= lo == hi  # stabilized window gives a point value for this class


def test_bounds_shallow_horizon_conservative():
    x = sup_seq([(9,)] * 4, [(1,), (2,), (3,)])
    y = sup_seq([], [(0,)])
    d = tail_pseudometric(x, y)
    lo, hi = tail_pseudometric_bounds(x, y, 5, 2)
    assert lo <= d <= hi


def test_bounds_euclid_resolution_grid():
    lo, hi = tail_pseudometric_bounds(PAPER_X, PAPER_Y, 40, 20, EUCLID, resolution=1e-6)
    assert hi - lo <= 1e-6
    assert lo <= math.sqrt(2) <= hi


# --- axioms and invariances --------------------------------------------------------

def test_axioms_random_triples():
    rng = Random(1234)
    for i in range(300):
        kind = SpaceKind.SUP_FINITE if i % 2 == 0 else SpaceKind.EUCLIDEAN
        norm = SUP if kind is SpaceKind.SUP_FINITE else EUCLID
        dim = rng.randint(1, 3)
        x, y, z = (random_seq(rng, kind, dim=dim) for _ in range(3))
        assert tail_pseudometric(x, x, norm) == 0
        dxy, dyx = tail_pseudometric(x, y, norm), tail_pseudometric(y, x, norm)
        dxz, dyz = tail_pseudometric(x, z, norm), tail_pseudometric(y, z, norm)
        if norm.exact:
            assert dxy == dyx
            assert dxz <= dxy + dyz
        else:
            assert abs(dxy - dyx) <= 1e-9
            assert dxz <= dxy + dyz + 1e-9


def test_zero_distance_implies_equal_radii_and_centers():
    rng = Random(777)
    for _ in range(200):
        x, y = equivalent_pair(rng)
        assert tail_pseudometric(x, y) == 0
        bx = center_box(coordinate_envelopes(x))
        by = center_box(coordinate_envelopes(y))
        assert bx == by
        # equal distance profiles at sampled points
        for _ in range(3):
            z = tuple(F(rng.randint(-20, 20), rng.randint(1, 3)) for _ in range(x.dim))
            assert sup_distance_profile(x, z) == sup_distance_profile(y, z)


def test_zero_distance_euclidean_centers_agree():
    rng = Random(778)
    for _ in range(100):
        x, y = equivalent_pair(rng, kind=SpaceKind.EUCLIDEAN)
        assert tail_pseudometric(x, y, EUCLID) == 0
        bx = smallest_enclosing_ball(cluster_set(x))
        by = smallest_enclosing_ball(cluster_set(y))
        assert bx.center == by.center and bx.radius == by.radius


def test_renorming_invariance_of_zero():
    rng = Random(4321)
    for _ in range(120):
        dim = rng.randint(1, 3)
        x = random_seq(rng, SpaceKind.SUP_FINITE, dim=dim)
        if rng.random() < 0.5:
            y = random_seq(rng, SpaceKind.SUP_FINITE, dim=dim)
        else:
            x, y = equivalent_pair(rng, max_dim=dim)
        norms = [SUP, L1, EUCLID, random_polyhedral_norm(rng, x.dim)]
        zero_flags = [float(tail_pseudometric(x, y, nm)) == 0.0 for nm in norms]
        assert all(zero_flags) or not any(zero_flags)


def test_selector_invariant_under_equivalence():
    rng = Random(5150)
    for i in range(200):
        kind = SpaceKind.SUP_FINITE if i % 2 == 0 else SpaceKind.EUCLIDEAN
        x, y = equivalent_pair(rng, kind=kind)
        assert canonical_center(x) == canonical_center(y)


# --- polyhedral norms ----------------------------------------------------------------

def test_polyhedral_norm_requires_rank():
    with pytest.raises(ValueError):
        Norm("poly", ((F(1), F(0)),))


def test_polyhedral_norm_is_exact():
    nm = Norm("poly", ((F(1), F(0)), (F(0), F(1)), (F(1), F(1))))
    assert nm((F(1), F(-2))) == 2
    assert nm.dist((F(0), F(0)), (F(1), F(1))) == 2


def test_chebyshev_radius_lp_matches_box():
    seq = sup_seq([], [(0, 0), (2, 4)])
    _, r = chebyshev_radius(cluster_set(seq), SUP)
    assert abs(r - 2) <= 1e-7
