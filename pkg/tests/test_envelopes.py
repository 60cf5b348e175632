"""Envelopes, center boxes, the balanced/pinned selections, clamp recentering."""

from fractions import Fraction as F
from random import Random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from asymcenter import (
    Envelope,
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    asymptotic_distance,
    center_box,
    clamp_recenter,
    coordinate_envelopes,
    enlargement_inclusion_check,
    midpoint_center,
    pinned_center,
)
from asymcenter.sampling import random_envelope

from conftest import fractions_st, seqs_st
from test_sequences import sup_seq


# --- coordinate envelopes ------------------------------------------------------

def test_envelope_constant():
    env = coordinate_envelopes(sup_seq([], [(1, 2)]))
    assert env.lower == env.upper == (F(1), F(2))


def test_envelope_two_cluster():
    env = coordinate_envelopes(sup_seq([], [(0, 0), (2, 4)]))
    assert env.lower == (F(0), F(0))
    assert env.upper == (F(2), F(4))
    # 20-term truncation oracle per coordinate
    terms = [sup_seq([], [(0, 0), (2, 4)]).core_term(n) for n in range(1, 21)]
    for k in range(2):
        assert env.lower[k] == min(t[k] for t in terms)
        assert env.upper[k] == max(t[k] for t in terms)


def test_envelope_prefix_invariant():
    a = coordinate_envelopes(sup_seq([], [(0, 0), (2, 4)]))
    b = coordinate_envelopes(sup_seq([(100, 100)], [(0, 0), (2, 4)]))
    assert a == b


def test_envelope_rejects_other_kinds():
    seq = RepresentableSeq(SpaceKind.EUCLIDEAN, 1, (), ((F(0),),))
    with pytest.raises(KindMismatchError):
        coordinate_envelopes(seq)


def test_envelope_requires_order():
    with pytest.raises(ValueError):
        Envelope((F(1),), (F(0),))


# --- center box ------------------------------------------------------------------

def test_center_box_two_cluster():
    box = center_box(coordinate_envelopes(sup_seq([], [(0, 0), (2, 4)])))
    assert box.radius == 2
    assert box.intervals == ((F(0), F(2)), (F(2), F(2)))


def test_center_box_degenerate():
    box = center_box(coordinate_envelopes(sup_seq([], [(3, -1)])))
    assert box.radius == 0
    assert box.intervals == ((F(3), F(3)), (F(-1), F(-1)))


def test_center_box_symmetric_alternating():
    box = center_box(coordinate_envelopes(sup_seq([], [(-1,), (1,)])))
    assert box.radius == 1
    assert box.intervals == ((F(0), F(0)),)


def test_center_box_rejects_infinity():
    env = Envelope((F(0),), (F(1),), infinity=(F(0), F(0)))
    with pytest.raises(KindMismatchError):
        center_box(env)


def test_box_membership_equivalence_random():
    # membership through intervals coincides with max(||b-g||, ||g-a||) <= r, exactly
    rng = Random(20240817)
    for _ in range(1000):
        env = random_envelope(rng)
        box = center_box(env)
        g = tuple(F(rng.randint(-40, 40), rng.randint(1, 4)) for _ in range(env.dim))
        assert box.contains(g) == (env.deviation(g) <= box.radius)


@settings(max_examples=50)
@given(seqs_st(kinds=(SpaceKind.SUP_FINITE,)))
def test_radius_consistency(seq):
    env = coordinate_envelopes(seq)
    box = center_box(env)
    g = midpoint_center(env)
    assert asymptotic_distance(seq, g) == box.radius
    # no candidate beats the box radius
    rng = Random(7)
    for _ in range(5):
        y = tuple(F(rng.randint(-40, 40), rng.randint(1, 4)) for _ in range(seq.dim))
        assert asymptotic_distance(seq, y) >= box.radius


# --- balanced and pinned selections ----------------------------------------------

def test_midpoint_examples():
    env = Envelope((F(0), F(0)), (F(2), F(4)))
    g = midpoint_center(env)
    assert g == (F(1), F(2))
    assert max(up - x for up, x in zip(env.upper, g)) == 2
    assert max(x - lo for lo, x in zip(env.lower, g)) == 2

    flat = Envelope((F(2), F(3)), (F(2), F(3)))
    assert midpoint_center(flat) == (F(2), F(3))

    sym = Envelope((F(-1),), (F(1),))
    assert midpoint_center(sym) == (F(0),)


@settings(max_examples=200)
@given(st.data())
def test_midpoint_equalities_random(data):
    rng = Random(data.draw(st.integers(0, 10**9)))
    env = random_envelope(rng)
    g = midpoint_center(env)  # asserts the two equalities internally
    half = env.sup_gap() / 2
    assert env.deviation(g) == half


def test_pinned_example():
    env = Envelope((F(0), F(0)), (F(2), F(4)))
    g = pinned_center(env, 0, F(0))
    assert g == (F(0), F(2))
    assert env.deviation(g) == 2


def test_pinned_at_midpoint_reduces():
    env = Envelope((F(0), F(0)), (F(2), F(4)))
    assert pinned_center(env, 1, F(2)) == midpoint_center(env)


def test_pinned_degenerate():
    env = Envelope((F(1), F(2)), (F(1), F(2)))
    assert pinned_center(env, 0, F(1)) == (F(1), F(2))


def test_pinned_rejects_outside_value():
    env = Envelope((F(0),), (F(1),))
    with pytest.raises(ValueError):
        pinned_center(env, 0, F(2))


@settings(max_examples=200)
@given(st.data())
def test_pinned_max_equality_random(data):
    rng = Random(data.draw(st.integers(0, 10**9)))
    env = random_envelope(rng)
    t0 = rng.randrange(env.dim)
    lo, up = env.lower[t0], env.upper[t0]
    s = lo + (up - lo) * F(rng.randint(0, 16), 16)
    g = pinned_center(env, t0, s)
    assert g[t0] == s
    expected = max(up - s, s - lo, env.sup_gap() / 2)
    assert env.deviation(g) == expected


# --- clamp recentering --------------------------------------------------------------

def test_clamp_recenter_identity():
    env = Envelope((F(0), F(0)), (F(2), F(4)))
    g = midpoint_center(env)
    assert clamp_recenter(env, g, g, 1) == g


def test_clamp_recenter_rejects_far_h():
    env = Envelope((F(-1),), (F(1),))
    g = (F(0),)
    with pytest.raises(ValueError):
        clamp_recenter(env, g, (F(3, 2),), 1)


def test_clamp_recenter_boundary_h():
    env = Envelope((F(-1),), (F(1),))
    z = clamp_recenter(env, (F(0),), (F(1),), 1)
    assert z == (F(0),)


@settings(max_examples=200)
@given(st.data())
def test_clamp_recenter_random(data):
    rng = Random(data.draw(st.integers(0, 10**9)))
    env = random_envelope(rng)
    box = center_box(env)
    delta = F(rng.randint(1, 16), 16)
    g = tuple(lo + (hi - lo) * F(rng.randint(0, 8), 8) for lo, hi in box.intervals)
    h = tuple(lo - delta + (hi - lo + 2 * delta) * F(rng.randint(0, 8), 8)
              for lo, hi in box.intervals)
    z = clamp_recenter(env, g, h, delta)
    assert box.contains(z)
    assert max(abs(a - b) for a, b in zip(z, h)) <= 1


# --- enlargement inclusion ------------------------------------------------------------

def test_inclusion_constant_attains_delta():
    seq = sup_seq([], [(2, 3)])
    rep = enlargement_inclusion_check(seq, F(1, 2), seed=1, trials=64)
    assert rep.max_distance == F(1, 2)


def test_inclusion_two_cluster():
    seq = sup_seq([], [(0, 0), (2, 4)])
    rep = enlargement_inclusion_check(seq, 1, seed=5, trials=200)
    assert rep.max_distance <= 1


def test_inclusion_zero_delta():
    seq = sup_seq([], [(0, 0), (2, 4)])
    rep = enlargement_inclusion_check(seq, 0, seed=2, trials=50)
    assert rep.max_distance == 0
