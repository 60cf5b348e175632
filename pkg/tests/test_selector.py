"""The canonical center selection and its promised invariances."""

from fractions import Fraction as F

import pytest

from asymcenter import (
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    canonical_center,
    canonicalize,
    forward,
)

from test_sequences import E_N, spike_seq, sup_seq
from test_oscillation import tail_seq
from test_tail_metric import euclid_seq


def test_convergent_returns_limit():
    assert canonical_center(sup_seq([(9, 9)], [(3, 4)])) == (F(3), F(4))
    assert canonical_center(euclid_seq([(3, 4)], pre=[(0, 0)])) == (3.0, 4.0)
    convergent_spike = spike_seq([(5,)], [0], core_pre=[(1,)])
    assert canonical_center(convergent_spike) == (F(5),)


def test_forward_invariance():
    seq = sup_seq([(8, 8)], [(0, 0), (2, 4)])
    assert canonical_center(seq) == canonical_center(forward(seq)) == (F(1), F(2))
    e = euclid_seq([(1, 0), (-1, 0)], pre=[(5, 5)])
    assert canonical_center(e) == canonical_center(forward(e))


def test_forward_invariance_spike():
    seq = spike_seq([(1,), (3,)], [2], core_pre=[(0,)])
    g = canonical_center(seq)
    g_shift = canonical_center(forward(seq))
    # same element of the vanishing space: extra explicit coordinate is zero
    assert g_shift[:len(g)] == g
    assert all(x == 0 for x in g_shift[len(g):])


def test_cycle_permutation_invariance():
    seq = sup_seq([], [(0, 0), (2, 4), (1, 1)])
    perms = [seq.cycle, seq.cycle[::-1], seq.cycle[1:] + seq.cycle[:1]]
    values = {canonical_center(RepresentableSeq(seq.kind, seq.dim, (), p)) for p in perms}
    assert len(values) == 1


def test_canonicalize_invariance():
    seq = spike_seq([(1,), (1,)], [3, -1], core_pre=[(9,)])
    assert canonical_center(seq) == canonical_center(canonicalize(seq))


def test_midpoint_rule_example():
    assert canonical_center(sup_seq([], [(0, 0), (2, 4)])) == (F(1), F(2))


def test_selector_unsupported_kind():
    with pytest.raises(KindMismatchError):
        canonical_center(tail_seq([(0,)], [1, -1]))


def test_e_n_center_is_origin():
    assert canonical_center(E_N) == (F(0),)
