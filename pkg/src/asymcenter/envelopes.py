"""Upper/lower envelopes of a sup-norm sequence and the center set they cut out.

For a sequence over finitely many coordinates the pointwise limsup/liminf
functions b and a determine everything: the asymptotic radius is half the
largest gap ``b(k) - a(k)`` and the center set is the coordinate box
``prod_k [b(k) - r, a(k) + r]``.  Each construction below asserts its defining
equalities exactly before returning (all arithmetic is rational).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from .sequences import (
    KindMismatchError,
    RepresentableSeq,
    Scalar,
    SpaceKind,
    Vector,
    as_fraction,
    as_vector,
)


@dataclass(frozen=True)
class Envelope:
    """Values of the lower (a) and upper (b) envelope on the stored coordinates.

    ``infinity`` carries the pair (a(inf), b(inf)) for sequences of functions
    vanishing at infinity; it is None in the plain finite-coordinate model.
    Coordinates beyond the stored ones are implicitly (0, 0).
    """

    lower: Vector
    upper: Vector
    infinity: tuple[Fraction, Fraction] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lower", as_vector(self.lower))
        object.__setattr__(self, "upper", as_vector(self.upper))
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper must have equal length")
        if any(lo > up for lo, up in zip(self.lower, self.upper)):
            raise ValueError("envelope requires lower <= upper pointwise")
        if self.infinity is not None:
            lo, up = as_fraction(self.infinity[0]), as_fraction(self.infinity[1])
            if lo > up:
                raise ValueError("envelope requires lower <= upper at infinity")
            object.__setattr__(self, "infinity", (lo, up))

    @property
    def dim(self) -> int:
        return len(self.lower)

    def sup_gap(self) -> Fraction:
        """||b - a|| over every point, including infinity when present."""
        gap = max((up - lo for lo, up in zip(self.lower, self.upper)), default=Fraction(0))
        if self.infinity is not None:
            gap = max(gap, self.infinity[1] - self.infinity[0])
        return gap

    def deviation(self, g: Sequence[Scalar]) -> Fraction:
        """max(||b - g||, ||g - a||) over the stored coordinates."""
        g = as_vector(g)
        return max(max(up - x, x - lo) for lo, up, x in zip(self.lower, self.upper, g))

    def to_json_dict(self) -> dict:
        d = {"lower": [str(x) for x in self.lower], "upper": [str(x) for x in self.upper]}
        if self.infinity is not None:
            d["infinity"] = {"lower": str(self.infinity[0]), "upper": str(self.infinity[1])}
        return d


@dataclass(frozen=True)
class CenterBox:
    """Asymptotic radius plus the per-coordinate intervals of the center set."""

    radius: Fraction
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(self, "radius", as_fraction(self.radius))
        ivs = tuple((as_fraction(lo), as_fraction(hi)) for lo, hi in self.intervals)
        if any(lo > hi for lo, hi in ivs):
            raise ValueError("center box has an empty interval")
        object.__setattr__(self, "intervals", ivs)

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def contains(self, g: Sequence[Scalar]) -> bool:
        g = as_vector(g)
        if len(g) != self.dim:
            raise ValueError("dimension mismatch")
        return all(lo <= x <= hi for x, (lo, hi) in zip(g, self.intervals))

    def sup_distance(self, y: Sequence[Scalar]) -> Fraction:
        """Exact sup-norm distance from y to the box."""
        y = as_vector(y)
        if len(y) != self.dim:
            raise ValueError("dimension mismatch")
        d = Fraction(0)
        for x, (lo, hi) in zip(y, self.intervals):
            if x < lo:
                d = max(d, lo - x)
            elif x > hi:
                d = max(d, x - hi)
        return d

    def to_json_dict(self) -> dict:
        return {
            "radius": str(self.radius),
            "intervals": [[str(lo), str(hi)] for lo, hi in self.intervals],
        }


def coordinate_envelopes(seq: RepresentableSeq) -> Envelope:
    """Pointwise limsup/liminf per coordinate: cycle max/min, prefix ignored.

    Only the finite-coordinate sup-norm model is handled here; every stored
    coordinate is an isolated point, so the envelope values reduce to the
    plain coordinatewise limsup and liminf of the terms.
    """
    if seq.kind is not SpaceKind.SUP_FINITE:
        raise KindMismatchError(f"coordinate_envelopes expects sup_finite, got {seq.kind.value}")
    lower = tuple(min(v[k] for v in seq.cycle) for k in range(seq.dim))
    upper = tuple(max(v[k] for v in seq.cycle) for k in range(seq.dim))
    return Envelope(lower, upper)


def center_box(env: Envelope) -> CenterBox:
    """Radius (half the largest envelope gap) and the center-set box."""
    if env.infinity is not None:
        raise KindMismatchError("center_box handles finite envelopes; use the vanishing-space path")
    r = env.sup_gap() / 2
    intervals = tuple((up - r, lo + r) for lo, up in zip(env.lower, env.upper))
    return CenterBox(r, intervals)


def midpoint_center(env: Envelope) -> Vector:
    """The midpoint selection g = (a + b) / 2; deviations to both envelopes balance."""
    if env.infinity is not None:
        raise KindMismatchError("midpoint_center handles finite envelopes")
    g = tuple((lo + up) / 2 for lo, up in zip(env.lower, env.upper))
    half = env.sup_gap() / 2
    dev_b = max(up - x for up, x in zip(env.upper, g))
    dev_a = max(x - lo for lo, x in zip(env.lower, g))
    assert dev_b == dev_a == half
    return g


def _clamp(x: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return min(hi, max(lo, x))


def pinned_center(env: Envelope, t0: int, s: Scalar) -> Vector:
    """Center selection with the value at coordinate ``t0`` pinned to ``s``.

    Requires s in [a(t0), b(t0)].  The remaining coordinates take the midpoint
    clamped into [b(k) - R', a(k) + R'] where
    R' = max(b(t0) - s, s - a(t0), half the largest gap); the construction
    satisfies max(||b-g||, ||g-a||) = R' exactly.
    """
    if env.infinity is not None:
        raise KindMismatchError("pinned_center handles finite envelopes")
    s = as_fraction(s)
    if not 0 <= t0 < env.dim:
        raise ValueError("t0 out of range")
    if not env.lower[t0] <= s <= env.upper[t0]:
        raise ValueError("pinned value must lie between the envelopes at t0")
    half = env.sup_gap() / 2
    pinned_dev = max(env.upper[t0] - s, s - env.lower[t0])
    bound = max(pinned_dev, half)
    g = []
    for k in range(env.dim):
        if k == t0:
            g.append(s)
        else:
            mid = (env.lower[k] + env.upper[k]) / 2
            g.append(_clamp(mid, env.upper[k] - bound, env.lower[k] + bound))
    g = tuple(g)
    assert env.deviation(g) == max(pinned_dev, half)
    return g


def clamp_recenter(env: Envelope, g: Sequence[Scalar], h: Sequence[Scalar],
                   delta: Scalar) -> Vector:
    """Move an almost-center h back into the center set without travelling far.

    ``g`` must belong to the center box and ``h`` to its delta-enlargement,
    with 0 < delta <= 1.  Returns z = h + u(g - h) where u clamps to [-1, 1];
    z is asserted to lie in the center box at sup-distance <= 1 from h.
    """
    delta = as_fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    g = as_vector(g)
    h = as_vector(h)
    box = center_box(env)
    if not box.contains(g):
        raise ValueError("g is not in the center set")
    if env.deviation(h) > box.radius + delta:
        raise ValueError("h is not in the delta-enlargement of the center set")
    one = Fraction(1)
    z = tuple(hk + _clamp(gk - hk, -one, one) for gk, hk in zip(g, h))
    assert max(abs(zk - hk) for zk, hk in zip(z, h)) <= 1
    assert box.contains(z)
    return z


@dataclass(frozen=True)
class InclusionReport:
    trials: int
    max_distance: Fraction
    witness: Vector | None

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "max_distance": str(self.max_distance),
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def enlargement_inclusion_check(seq: RepresentableSeq, delta: Scalar, seed: int,
                                trials: int) -> InclusionReport:
    """Sample the delta-enlargement and measure sup-distance to the center box.

    The enlargement of the center set is itself a box (intervals widened by
    delta on both sides); the two extreme corners are sampled first so the
    reported maximum attains the exact worst case, then ``trials`` further
    points are drawn uniformly from a fine rational grid.  Every sampled
    distance is at most delta, hence at most 1 whenever delta <= 1.
    """
    delta = as_fraction(delta)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    box = center_box(coordinate_envelopes(seq))
    lo_hi = [(lo - delta, hi + delta) for lo, hi in box.intervals]
    rng = Random(seed)
    grid = 997
    samples: list[Vector] = [
        tuple(lo for lo, _ in lo_hi),
        tuple(hi for _, hi in lo_hi),
    ]
    for _ in range(max(0, trials - len(samples))):
        samples.append(tuple(lo + (hi - lo) * Fraction(rng.randint(0, grid), grid)
                             for lo, hi in lo_hi))
    worst = Fraction(0)
    witness = None
    for y in samples:
        d = box.sup_distance(y)
        if d > worst:
            worst, witness = d, y
    return InclusionReport(trials=len(samples), max_distance=worst, witness=witness)
