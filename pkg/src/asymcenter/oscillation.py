"""Radii and centers in the c0 / c / l_inf sequence-space models.

Two independent routes are implemented for the vanishing-at-infinity model:
the envelope route (envelopes extended with a point at infinity, radius
``max(b(inf), -a(inf), ||b - a|| / 2)`` and a zero-clamp center) and the
oscillation route (four window scalars alpha, beta, gamma, delta and the
per-space radius formulas).  The two must agree exactly on every instance;
tests and the crosscheck command enforce this.

Window limits over the tail index stabilize once the index clears every
preperiod; each scalar is evaluated at two window offsets one joint cycle
apart and the equality is asserted, which catches representation bugs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .envelopes import Envelope
from .sequences import (
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    Vector,
)

TAIL_KINDS = (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL)


class StabilizationError(AssertionError):
    """A window limit failed to stabilize; the representation is inconsistent."""


def _require_kind(seq: RepresentableSeq, kinds, what: str):
    if seq.kind not in kinds:
        allowed = "/".join(k.value for k in kinds)
        raise KindMismatchError(f"{what} expects {allowed}, got {seq.kind.value}")


def vanishing_envelopes(seq: RepresentableSeq) -> Envelope:
    """Envelopes of a spike sequence on the coordinates plus the point at infinity.

    Stored coordinates get the pointwise cycle extremes of the core (all later
    coordinates are implicitly 0/0).  At infinity the attainable limit values
    are 0 together with the spike amplitudes that recur, so
    b(inf) = max(0, max spike cycle) and a(inf) = min(0, min spike cycle).
    """
    _require_kind(seq, (SpaceKind.C0_SPIKE,), "vanishing_envelopes")
    lower = tuple(min(v[k] for v in seq.cycle) for k in range(seq.dim))
    upper = tuple(max(v[k] for v in seq.cycle) for k in range(seq.dim))
    zero = Fraction(0)
    inf_lo = min(zero, min(seq.spike.cycle))
    inf_up = max(zero, max(seq.spike.cycle))
    return Envelope(lower, upper, infinity=(inf_lo, inf_up))


def radius_with_infinity(env: Envelope) -> Fraction:
    """Asymptotic radius from an envelope carrying a point at infinity."""
    if env.infinity is None:
        raise KindMismatchError("envelope has no point at infinity; use center_box")
    lo, up = env.infinity
    return max(up, -lo, env.sup_gap() / 2)


def zero_clamp_center(env: Envelope) -> Vector:
    """Center selection in the vanishing model: clamp 0 into each box interval.

    The result is finitely supported (zero beyond the stored coordinates,
    where the intervals are [-R, R] and contain 0 automatically); membership
    in the center set is asserted coordinate by coordinate.
    """
    r = radius_with_infinity(env)
    g = []
    for lo, up in zip(env.lower, env.upper):
        iv_lo, iv_hi = up - r, lo + r
        assert iv_lo <= iv_hi
        g.append(min(iv_hi, max(iv_lo, Fraction(0))))
    g = tuple(g)
    for x, lo, up in zip(g, env.lower, env.upper):
        assert up - r <= x <= lo + r
    return g


@dataclass(frozen=True)
class OscillationScalars:
    """The four window scalars of a bounded double array x_n(k).

    alpha: lim_m sup_k (sup_{n>=m} x_n(k) - inf_{n>=m} x_n(k))
    beta:  sup_k (limsup_n x_n(k) - liminf_n x_n(k))
    gamma: limsup_{n,k} x_n(k) - liminf_{n,k} x_n(k)
    delta: limsup_{n,k} |x_n(k)|

    Construction asserts the identities beta <= alpha,
    max(beta, gamma) = max(alpha, gamma) and
    max(beta, 2*delta) = max(alpha, 2*delta); a violation is an
    implementation bug, never a property of the input.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        assert 0 <= self.beta <= self.alpha
        assert max(self.beta, self.gamma) == max(self.alpha, self.gamma)
        assert max(self.beta, 2 * self.delta) == max(self.alpha, 2 * self.delta)

    def to_json_dict(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("alpha", "beta", "gamma", "delta")}


def _column_extremes(seq: RepresentableSeq, m: int) -> list[tuple[Fraction, Fraction]]:
    """Per stored coordinate, (inf, sup) of x_n(k) over n in [m, m + joint cycle)."""
    span = range(m, m + seq.joint_cycle_length())
    out = []
    for k in range(seq.dim):
        vals = [seq.core_term(n)[k] for n in span]
        out.append((min(vals), max(vals)))
    return out


def _channel_window(seq: RepresentableSeq, m: int) -> list[Fraction]:
    span = range(m, m + seq.joint_cycle_length())
    ch = seq.channel
    return [ch.term(n) for n in span]


def _alpha_at(seq: RepresentableSeq, m: int) -> Fraction:
    cols = _column_extremes(seq, m)
    a = max((up - lo for lo, up in cols), default=Fraction(0))
    ch = _channel_window(seq, m)
    if seq.kind is SpaceKind.C0_SPIKE:
        # a spike coordinate dim + n0 with n0 >= m oscillates between s_{n0} and 0
        return max(a, max(abs(s) for s in ch))
    return max(a, max(ch) - min(ch))


def _joint_window_values(seq: RepresentableSeq, m: int) -> list[Fraction]:
    """Values x_n(k) over the window n, k >= m, reduced to its recurring part."""
    ch = _channel_window(seq, m)
    if seq.kind is SpaceKind.C0_SPIKE:
        # off-spike entries vanish; the zero value always recurs in the window
        return ch + [Fraction(0)]
    return ch


def oscillation_scalars(seq: RepresentableSeq) -> OscillationScalars:
    """Evaluate the four window scalars exactly via stabilized windows."""
    _require_kind(seq, (SpaceKind.C0_SPIKE,) + TAIL_KINDS, "oscillation_scalars")
    cyc = seq.joint_cycle_length()
    m0 = seq.joint_preperiod_length() + 1

    alpha = _alpha_at(seq, m0)
    if alpha != _alpha_at(seq, m0 + cyc):
        raise StabilizationError("alpha window did not stabilize")

    cols = _column_extremes(seq, m0)
    beta = max((up - lo for lo, up in cols), default=Fraction(0))
    if seq.kind in TAIL_KINDS:
        ch = _channel_window(seq, m0)
        beta = max(beta, max(ch) - min(ch))

    mg = max(m0, seq.dim + 1)
    vals = _joint_window_values(seq, mg)
    vals2 = _joint_window_values(seq, mg + cyc)
    gamma = max(vals) - min(vals)
    delta = max(abs(v) for v in vals)
    if gamma != max(vals2) - min(vals2) or delta != max(abs(v) for v in vals2):
        raise StabilizationError("joint window did not stabilize")

    return OscillationScalars(alpha=alpha, beta=beta, gamma=gamma, delta=delta)


def _tail_gap(seq: RepresentableSeq) -> Fraction:
    m0 = seq.joint_preperiod_length() + 1
    ch = _channel_window(seq, m0)
    return max(ch) - min(ch)


def sequence_space_radius(seq: RepresentableSeq, space: str) -> Fraction:
    """Asymptotic radius by the per-space oscillation formula.

    space = "c0":   max(alpha / 2, delta)            (spike model)
    space = "c":    max(alpha, tail oscillation) / 2  (convergent-tail model)
    space = "linf": alpha / 2                         (bounded-tail model)
    """
    scal = oscillation_scalars(seq)
    if space == "c0":
        _require_kind(seq, (SpaceKind.C0_SPIKE,), "the c0 radius formula")
        return max(scal.alpha / 2, scal.delta)
    if space == "c":
        _require_kind(seq, (SpaceKind.C_TAIL,), "the c radius formula")
        return max(scal.alpha, _tail_gap(seq)) / 2
    if space == "linf":
        _require_kind(seq, TAIL_KINDS, "the l_inf radius formula")
        return scal.alpha / 2
    raise ValueError(f"unknown space {space!r} (expected c0, c or linf)")
