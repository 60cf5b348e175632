"""Finitely-describable bounded sequences and their asymptotic distance functional.

A sequence is stored as a finite-dimensional core (preperiod + nonempty cycle of
rational vectors) plus, depending on the ambient space, an eventually periodic
scalar channel:

* ``sup_finite`` / ``euclidean`` -- the core alone, read in R^dim with the sup
  or Euclidean norm;
* ``c0_spike`` -- term n additionally carries a spike of amplitude ``spike[n]``
  at coordinate ``dim + n`` (an escaping, finitely supported perturbation);
* ``c_tail`` / ``linf_tail`` -- term n is constant equal to ``tail[n]`` at every
  coordinate beyond ``dim``.

All scalars are ``fractions.Fraction``; every sup-norm quantity in this module
is computed exactly.  Terms are indexed from 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Vector = tuple[Fraction, ...]


class SpaceKind(str, Enum):
    SUP_FINITE = "sup_finite"
    EUCLIDEAN = "euclidean"
    C0_SPIKE = "c0_spike"
    C_TAIL = "c_tail"
    LINF_TAIL = "linf_tail"


LATTICE_KINDS = (SpaceKind.SUP_FINITE, SpaceKind.C0_SPIKE, SpaceKind.C_TAIL, SpaceKind.LINF_TAIL)
CLUSTER_KINDS = (SpaceKind.SUP_FINITE, SpaceKind.EUCLIDEAN)


class KindMismatchError(ValueError):
    """Operation applied to a sequence whose space kind it does not support."""


def as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational scalar, got {type(x).__name__}")


def as_vector(v: Iterable[Scalar]) -> Vector:
    return tuple(as_fraction(x) for x in v)


@dataclass(frozen=True)
class ScalarPeriodic:
    """Eventually periodic scalar sequence (spike amplitudes or tail values)."""

    preperiod: tuple[Fraction, ...]
    cycle: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(as_fraction(x) for x in self.preperiod))
        object.__setattr__(self, "cycle", tuple(as_fraction(x) for x in self.cycle))
        if not self.cycle:
            raise ValueError("scalar channel needs a nonempty cycle")

    def term(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("terms are indexed from 1")
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.cycle[(n - 1 - len(self.preperiod)) % len(self.cycle)]


@dataclass(frozen=True)
class RepresentableSeq:
    """Bounded sequence with a finite description.

    ``preperiod`` and ``cycle`` hold the explicitly stored vectors in R^dim;
    ``spike``/``tail`` hold the scalar channel required by the space kind.
    Instances are immutable and every operation on them is a pure function.
    """

    kind: SpaceKind
    dim: int
    preperiod: tuple[Vector, ...]
    cycle: tuple[Vector, ...]
    spike: ScalarPeriodic | None = None
    tail: ScalarPeriodic | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SpaceKind(self.kind))
        object.__setattr__(self, "preperiod", tuple(as_vector(v) for v in self.preperiod))
        object.__setattr__(self, "cycle", tuple(as_vector(v) for v in self.cycle))
        if self.dim < 1:
            raise ValueError("dim must be a positive integer")
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        for v in self.preperiod + self.cycle:
            if len(v) != self.dim:
                raise ValueError("all stored vectors must have length dim")
        if self.kind is SpaceKind.C0_SPIKE:
            if self.spike is None or self.tail is not None:
                raise ValueError("c0_spike requires a spike channel and no tail")
        elif self.kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL):
            if self.tail is None or self.spike is not None:
                raise ValueError("tail kinds require a tail channel and no spike")
        else:
            if self.spike is not None or self.tail is not None:
                raise ValueError(f"{self.kind.value} carries no scalar channel")

    @property
    def channel(self) -> ScalarPeriodic | None:
        return self.spike if self.spike is not None else self.tail

    def core_term(self, n: int) -> Vector:
        if n < 1:
            raise ValueError("terms are indexed from 1")
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.cycle[(n - 1 - len(self.preperiod)) % len(self.cycle)]

    def joint_preperiod_length(self) -> int:
        aux = self.channel
        p = len(self.preperiod)
        return max(p, len(aux.preperiod)) if aux is not None else p

    def joint_cycle_length(self) -> int:
        aux = self.channel
        c = len(self.cycle)
        return math.lcm(c, len(aux.cycle)) if aux is not None else c

    def term_coord(self, n: int, k: int) -> Fraction:
        """Value x_n(k) of term n at coordinate k (both 1-indexed)."""
        if k < 1:
            raise ValueError("coordinates are indexed from 1")
        if k <= self.dim:
            return self.core_term(n)[k - 1]
        if self.kind is SpaceKind.C0_SPIKE:
            return self.spike.term(n) if k == self.dim + n else Fraction(0)
        if self.kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL):
            return self.tail.term(n)
        raise KindMismatchError(f"{self.kind.value} stores only {self.dim} coordinates")


@dataclass(frozen=True)
class FinitePointSet:
    """Deduplicated point set with a canonical (lexicographic) order."""

    points: tuple[Vector, ...]

    def __post_init__(self):
        pts = sorted({as_vector(p) for p in self.points})
        if pts:
            d = len(pts[0])
            if any(len(p) != d for p in pts):
                raise ValueError("points must share a dimension")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self):
        return len(self.points)

    @property
    def dim(self) -> int:
        if not self.points:
            raise ValueError("empty point set has no dimension")
        return len(self.points[0])


def sup_norm(v: Sequence[Fraction]) -> Fraction:
    return max((abs(x) for x in v), default=Fraction(0))


def euclid_norm(v: Sequence[Fraction]) -> float:
    return math.sqrt(float(sum(x * x for x in v)))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def cluster_set(seq: RepresentableSeq) -> FinitePointSet:
    """Norm-cluster values of the core: the distinct cycle vectors.

    The preperiod never contributes; spike/tail kinds are rejected because
    their cluster structure is handled by closed forms elsewhere.
    """
    if seq.kind not in CLUSTER_KINDS:
        raise KindMismatchError(f"cluster_set supports sup_finite/euclidean, got {seq.kind.value}")
    return FinitePointSet(seq.cycle)


def _resolve_norm(seq: RepresentableSeq, norm):
    if norm is None:
        return "euclid" if seq.kind is SpaceKind.EUCLIDEAN else "sup"
    if norm in ("sup", "euclid"):
        if norm == "euclid" and seq.kind not in CLUSTER_KINDS:
            raise KindMismatchError("spike/tail kinds live in sup-normed spaces")
        return norm
    if hasattr(norm, "dist"):  # a tail_metric.Norm
        if seq.kind not in CLUSTER_KINDS:
            raise KindMismatchError("custom norms apply to sup_finite/euclidean kinds only")
        return norm
    raise ValueError(f"unknown norm {norm!r}")


def asymptotic_distance(seq: RepresentableSeq, y: Sequence[Scalar], norm=None,
                        y_tail: Scalar = 0):
    """limsup_n ||x_n - y|| for a fixed candidate center y.

    ``y`` has ``dim`` coordinates and is read as a finitely supported element
    in the spike and tail models; for tail kinds ``y_tail`` gives y's constant
    value at coordinates beyond ``dim``.  Exact over one full joint cycle for
    the sup-norm kinds; float for the Euclidean norm.
    """
    y = as_vector(y)
    if len(y) != seq.dim:
        raise ValueError(f"dimension mismatch: y has {len(y)} coordinates, expected {seq.dim}")
    which = _resolve_norm(seq, norm)
    if seq.kind in CLUSTER_KINDS:
        pts = cluster_set(seq).points
        if which == "sup":
            return max(sup_norm(vec_sub(p, y)) for p in pts)
        if which == "euclid":
            return max(euclid_norm(vec_sub(p, y)) for p in pts)
        return max(which.dist(p, y) for p in pts)
    y_tail = as_fraction(y_tail)
    start = seq.joint_preperiod_length() + 1
    best = Fraction(0)
    for n in range(start, start + seq.joint_cycle_length()):
        core = sup_norm(vec_sub(seq.core_term(n), y))
        if seq.kind is SpaceKind.C0_SPIKE:
            v = max(core, abs(seq.spike.term(n)))
        else:
            v = max(core, abs(seq.tail.term(n) - y_tail))
        best = max(best, v)
    return best


def delta_set_membership(seq: RepresentableSeq, y: Sequence[Scalar], delta: Scalar,
                         r, norm=None, y_tail: Scalar = 0) -> bool:
    """Whether y lies within delta of optimal: limsup ||x_n - y|| <= r + delta.

    ``r`` is the caller-supplied asymptotic radius of ``seq``.
    """
    delta = as_fraction(delta) if not isinstance(delta, float) else delta
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return asymptotic_distance(seq, y, norm=norm, y_tail=y_tail) <= r + delta


# ---------------------------------------------------------------------------
# canonical form and shift


def _primitive(word: tuple) -> tuple:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word == word[:p] * (n // p):
            return word[:p]
    return word


def _least_rotation(word: tuple) -> tuple:
    return min(tuple(word[i:] + word[:i]) for i in range(len(word)))


def canonicalize(seq: RepresentableSeq) -> RepresentableSeq:
    """Canonical representative of the eventual (shift-equivalence) class.

    Preperiods are dropped (finite prefixes carry no asymptotic content), the
    joint cycle of (core, scalar channel) is reduced to its primitive length
    and rotated to the lexicographically least phase, and each component cycle
    is then reduced to its own primitive length.  Idempotent; two descriptions
    receive the same canonical form iff they generate the same sequence up to
    dropping finite prefixes.
    """
    aux = seq.channel
    start = seq.joint_preperiod_length() + 1
    joint_len = seq.joint_cycle_length()
    if aux is None:
        word = tuple(seq.core_term(n) for n in range(start, start + joint_len))
    else:
        word = tuple((seq.core_term(n), aux.term(n)) for n in range(start, start + joint_len))
    word = _least_rotation(_primitive(word))
    if aux is None:
        core = word
        new_aux = None
    else:
        core = _primitive(tuple(item[0] for item in word))
        new_aux = ScalarPeriodic((), _primitive(tuple(item[1] for item in word)))
    spike = new_aux if seq.kind is SpaceKind.C0_SPIKE else None
    tail = new_aux if seq.kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL) else None
    return RepresentableSeq(seq.kind, seq.dim, (), core, spike=spike, tail=tail)


def _shift_scalar(ch: ScalarPeriodic) -> ScalarPeriodic:
    if ch.preperiod:
        return ScalarPeriodic(ch.preperiod[1:], ch.cycle)
    return ScalarPeriodic((), ch.cycle[1:] + ch.cycle[:1])


def forward(seq: RepresentableSeq) -> RepresentableSeq:
    """Drop the first term: the sequence (x_2, x_3, ...).

    For ``c0_spike`` the result is re-represented with ``dim + 1`` explicit
    coordinates, since term n of the shifted sequence carries its spike at
    coordinate (dim + 1) + n; the new explicit coordinate is identically zero.
    """
    if seq.preperiod:
        pre, cyc = seq.preperiod[1:], seq.cycle
    else:
        pre, cyc = (), seq.cycle[1:] + seq.cycle[:1]
    if seq.kind is SpaceKind.C0_SPIKE:
        pad = lambda v: v + (Fraction(0),)
        return RepresentableSeq(seq.kind, seq.dim + 1,
                                tuple(pad(v) for v in pre), tuple(pad(v) for v in cyc),
                                spike=_shift_scalar(seq.spike))
    tail = _shift_scalar(seq.tail) if seq.tail is not None else None
    return RepresentableSeq(seq.kind, seq.dim, pre, cyc, tail=tail)


def expand_terms(seq: RepresentableSeq, count: int) -> list[Vector]:
    """First ``count`` core vectors; the raw expansion used by test oracles."""
    return [seq.core_term(n) for n in range(1, count + 1)]
