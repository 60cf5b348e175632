"""Smallest enclosing ball, far subsequences, hull certificates, center-shift bounds."""

import math
from fractions import Fraction as F
from random import Random

import pytest

from asymcenter import (
    FinitePointSet,
    RepresentableSeq,
    SpaceKind,
    center_hull_distance,
    cluster_set,
    far_subsequence,
    holder_center_bound,
    set_center_shift_bound,
    smallest_enclosing_ball,
)
from asymcenter.euclidean_center import distance_to_hull
from asymcenter.oracles import euclidean_radius_oracle
from asymcenter.sampling import random_pointset, random_seq, trial_rng

from test_tail_metric import euclid_seq


def test_seb_diameter_pair():
    ball = smallest_enclosing_ball([(F(-1), F(0)), (F(1), F(0))])
    assert ball.center == (0.0, 0.0)
    assert ball.radius == 1.0
    assert set(ball.support) == {(-1.0, 0.0), (1.0, 0.0)}


def test_seb_single_point():
    ball = smallest_enclosing_ball([(F(3), F(-2))])
    assert ball.center == (3.0, -2.0)
    assert ball.radius == 0.0


def test_seb_equilateral_triangle():
    pts = []
    for k in range(3):
        ang = 2 * math.pi * k / 3
        pts.append((F(math.cos(ang)).limit_denominator(10**12),
                    F(math.sin(ang)).limit_denominator(10**12)))
    ball = smallest_enclosing_ball(pts)
    assert abs(ball.radius - 1.0) <= 1e-9
    assert max(abs(c) for c in ball.center) <= 1e-9
    orc = euclidean_radius_oracle(pts)
    assert abs(ball.radius - orc.value) <= 1e-6


def test_seb_insertion_order_irrelevant():
    rng = Random(31)
    for _ in range(50):
        pts = random_pointset(rng, rng.randint(2, 4))
        b1 = smallest_enclosing_ball(pts, seed=1)
        b2 = smallest_enclosing_ball(pts, seed=99)
        assert abs(b1.radius - b2.radius) <= 1e-9
        assert max(abs(a - b) for a, b in zip(b1.center, b2.center)) <= 1e-9


def test_seb_certificates():
    rng = Random(32)
    for _ in range(100):
        pts = random_pointset(rng, rng.randint(2, 5))
        ball = smallest_enclosing_ball(pts)
        scale = 1.0 + ball.radius
        for p in FinitePointSet(tuple(pts)).points:
            d = math.dist([float(x) for x in p], ball.center)
            assert d <= ball.radius + 1e-9 * scale
        assert ball.support
        assert distance_to_hull(ball.center, ball.support) <= 1e-7 * scale


def test_seb_empty_rejected():
    with pytest.raises(ValueError):
        smallest_enclosing_ball([])


# --- far subsequence --------------------------------------------------------------

def test_far_alternating_keeps_everything():
    seq = euclid_seq([(-1,), (1,)])
    out = far_subsequence(seq, 0.5)
    assert out.cycle == seq.cycle


def test_far_drops_interior_point():
    seq = euclid_seq([(1, 0), (-1, 0), (0, 0)])
    out = far_subsequence(seq, 0.5)
    assert set(out.cycle) == {(F(1), F(0)), (F(-1), F(0))}
    ball = smallest_enclosing_ball(cluster_set(out))
    assert abs(ball.radius - 1.0) <= 1e-9
    assert max(abs(c) for c in ball.center) <= 1e-9


def test_far_constant_unchanged():
    seq = euclid_seq([(2, 2)])
    out = far_subsequence(seq, 0.25)
    assert out.cycle == seq.cycle
    assert smallest_enclosing_ball(cluster_set(out)).radius == 0.0


def test_far_preserves_center_radius_random():
    rng = Random(33)
    for i in range(200):
        seq = random_seq(rng, SpaceKind.EUCLIDEAN, max_dim=4)
        r = smallest_enclosing_ball(cluster_set(seq)).radius
        for eps in (0.1, 0.5, r / 2 or 0.1):
            far_subsequence(seq, eps)  # internal 1e-9 preservation asserts


# --- hull membership ----------------------------------------------------------------

def test_hull_segment_center():
    seq = euclid_seq([(-1, 0), (1, 0), (0, F(1, 2))])
    assert center_hull_distance(seq, 0.5) <= 1e-7


def test_hull_single_point():
    assert center_hull_distance(euclid_seq([(4, 4)]), 1.0) <= 1e-7


def test_hull_simplex_barycenter():
    # circumcenter of the standard simplex corners is their barycenter
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    seq = euclid_seq(pts)
    assert center_hull_distance(seq, 0.5) <= 1e-7


def test_hull_random():
    rng = Random(34)
    for i in range(100):
        seq = random_seq(rng, SpaceKind.EUCLIDEAN, max_dim=4)
        assert center_hull_distance(seq, 0.5) <= 1e-7


# --- center shift bounds ---------------------------------------------------------------

def test_holder_identical_pair():
    seq = euclid_seq([(1, 1), (2, 0)])
    assert abs(holder_center_bound(seq, seq)) <= 1e-12


def test_holder_paper_pair_value():
    x = euclid_seq([(-1, 0), (1, 0)])
    y = euclid_seq([(0, -1), (0, 1)])
    slack = holder_center_bound(x, y)
    assert abs(slack - (2 + 2 * math.sqrt(2))) <= 1e-9


def test_holder_random_nonnegative():
    rng = Random(35)
    for _ in range(300):
        dim = rng.randint(2, 5)
        x = random_seq(rng, SpaceKind.EUCLIDEAN, dim=dim)
        y = random_seq(rng, SpaceKind.EUCLIDEAN, dim=dim)
        assert holder_center_bound(x, y) >= -1e-7


def test_set_bound_identical():
    a = [(F(0), F(0)), (F(1), F(2))]
    assert abs(set_center_shift_bound(a, a)) <= 1e-12


def test_set_bound_cross_pair():
    a = [(F(-1), F(0)), (F(1), F(0))]
    b = [(F(0), F(-1)), (F(0), F(1))]
    slack = set_center_shift_bound(a, b)
    assert abs(slack - (2 + 2 * math.sqrt(2))) <= 1e-9


def test_set_bound_random_nonnegative():
    rng = Random(36)
    for _ in range(300):
        dim = rng.randint(2, 5)
        a = random_pointset(rng, dim)
        b = random_pointset(rng, dim)
        assert set_center_shift_bound(a, b) >= -1e-7


def test_set_bound_rejects_empty_and_mismatch():
    with pytest.raises(ValueError):
        set_center_shift_bound([], [(F(0),)])
    with pytest.raises(ValueError):
        set_center_shift_bound([(F(0),)], [(F(0), F(0))])


# --- oracle parity ------------------------------------------------------------------------

def test_seb_matches_subgradient_oracle():
    for i in range(200):
        rng = trial_rng(55, i)
        pts = random_pointset(rng, rng.randint(2, 5))
        ball = smallest_enclosing_ball(pts)
        orc = euclidean_radius_oracle(pts, seed=i)
        assert orc.value >= ball.radius - 1e-6
        assert abs(ball.radius - orc.value) <= 1e-6
        if len(ball.support) >= 2:
            assert max(abs(a - b) for a, b in zip(ball.center, orc.argmin)) <= 1e-6
