"""A concrete continuous selection from the asymptotic-center map.

The selection depends only on the envelope / cluster structure of the input,
so it is invariant under dropping finite prefixes, permuting the cycle, and
tail-pseudometric equivalence, and it returns the limit of any convergent
sequence.  Per space kind:

* ``sup_finite``  -- the midpoint of the envelope box;
* ``c0_spike``    -- the zero-clamp selection of the vanishing model;
* ``euclidean``   -- the smallest-enclosing-ball center of the cluster set.
"""

from __future__ import annotations

from .envelopes import coordinate_envelopes, midpoint_center
from .euclidean_center import smallest_enclosing_ball
from .oscillation import vanishing_envelopes, zero_clamp_center
from .sequences import KindMismatchError, RepresentableSeq, SpaceKind, cluster_set


def canonical_center(seq: RepresentableSeq):
    """One point of the asymptotic center set, chosen envelope-deterministically.

    Returns a tuple of Fractions for the sup-norm kinds (for the spike model,
    zero beyond the stored coordinates) and a tuple of floats for the
    Euclidean kind.
    """
    if seq.kind is SpaceKind.SUP_FINITE:
        return midpoint_center(coordinate_envelopes(seq))
    if seq.kind is SpaceKind.C0_SPIKE:
        return zero_clamp_center(vanishing_envelopes(seq))
    if seq.kind is SpaceKind.EUCLIDEAN:
        return smallest_enclosing_ball(cluster_set(seq), seed=0).center
    raise KindMismatchError(f"no canonical selection for kind {seq.kind.value}")
