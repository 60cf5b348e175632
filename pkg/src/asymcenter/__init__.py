"""Asymptotic centers and radii of finitely-describable bounded sequences."""

from .envelopes import (
    CenterBox,
    Envelope,
    center_box,
    clamp_recenter,
    coordinate_envelopes,
    enlargement_inclusion_check,
    midpoint_center,
    pinned_center,
)
from .euclidean_center import (
    BallCenter,
    center_hull_distance,
    far_subsequence,
    holder_center_bound,
    set_center_shift_bound,
    smallest_enclosing_ball,
)
from .oscillation import (
    OscillationScalars,
    oscillation_scalars,
    radius_with_infinity,
    sequence_space_radius,
    vanishing_envelopes,
    zero_clamp_center,
)
from .selector import canonical_center
from .sequences import (
    FinitePointSet,
    KindMismatchError,
    RepresentableSeq,
    ScalarPeriodic,
    SpaceKind,
    asymptotic_distance,
    canonicalize,
    cluster_set,
    delta_set_membership,
    forward,
)
from .tail_metric import (
    EUCLID,
    L1,
    SUP,
    Norm,
    TailSet,
    hausdorff,
    tail_pseudometric,
    tail_pseudometric_bounds,
    tail_set,
)

__version__ = "0.1.0"
