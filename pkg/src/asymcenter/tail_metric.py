"""Tail sets and the tail-containment pseudometric between bounded sequences.

The pseudometric is the infimum of eps > 0 such that deep enough tails of each
sequence fit inside an eps-neighbourhood of every tail of the other.  For the
cluster-representable kinds the tails stabilize to the cluster set, and the
pseudometric reduces to the Hausdorff distance between cluster sets; that
reduction is an implementation theorem here, guarded by the window oracle
``tail_pseudometric_bounds``, which evaluates the defining quantifiers on
finite index windows with stabilization checks.

Norms are explicit so the same code path serves the renorming-invariance
property and the conjecture fuzzer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .sequences import (
    CLUSTER_KINDS,
    FinitePointSet,
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    Vector,
    as_vector,
    cluster_set,
    sup_norm,
    vec_sub,
)


@dataclass(frozen=True)
class Norm:
    """A norm on R^dim: sup, l1, euclid, or polyhedral max_j |<a_j, v>|.

    Polyhedral matrices must have full column rank so the functional is
    definite; rows are exact rationals, making sup/l1/poly distances exact.
    """

    kind: str
    matrix: tuple[Vector, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("sup", "l1", "euclid", "poly"):
            raise ValueError(f"unknown norm kind {self.kind!r}")
        if self.kind == "poly":
            if not self.matrix:
                raise ValueError("polyhedral norm needs functional rows")
            object.__setattr__(self, "matrix", tuple(as_vector(r) for r in self.matrix))
            if _rank(self.matrix) < len(self.matrix[0]):
                raise ValueError("polyhedral norm rows must span the space")

    def __call__(self, v: Sequence) -> Fraction | float:
        v = as_vector(v)
        if self.kind == "sup":
            return sup_norm(v)
        if self.kind == "l1":
            return sum((abs(x) for x in v), Fraction(0))
        if self.kind == "euclid":
            return math.sqrt(float(sum(x * x for x in v)))
        return max(abs(sum(a * x for a, x in zip(row, v))) for row in self.matrix)

    def dist(self, u: Sequence, v: Sequence) -> Fraction | float:
        return self(vec_sub(as_vector(u), as_vector(v)))

    @property
    def exact(self) -> bool:
        return self.kind != "euclid"


SUP = Norm("sup")
L1 = Norm("l1")
EUCLID = Norm("euclid")


def _rank(rows: tuple[Vector, ...]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0])
    for c in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][c] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][c]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                f = mat[r][c] / inv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class TailSet:
    """The value set {x_m : m >= n}: remaining preperiod suffix plus the cycle set."""

    index: int
    points: tuple[Vector, ...]

    def __contains__(self, p) -> bool:
        return as_vector(p) in self.points


def tail_set(seq: RepresentableSeq, n: int) -> TailSet:
    if seq.kind not in CLUSTER_KINDS:
        raise KindMismatchError(f"tail_set supports sup_finite/euclidean, got {seq.kind.value}")
    if n < 1:
        raise ValueError("tail index must be >= 1")
    suffix = seq.preperiod[n - 1:] if n <= len(seq.preperiod) else ()
    pts = sorted(set(suffix) | set(seq.cycle))
    return TailSet(index=n, points=tuple(pts))


def directed_excess(a_pts: Sequence[Vector], b_pts: Sequence[Vector], norm: Norm = SUP):
    """sup over a of the distance from a to the set b (one-sided Hausdorff)."""
    return max(min(norm.dist(a, b) for b in b_pts) for a in a_pts)


def hausdorff(a_pts: Sequence[Vector], b_pts: Sequence[Vector], norm: Norm = SUP):
    return max(directed_excess(a_pts, b_pts, norm), directed_excess(b_pts, a_pts, norm))


def _check_pair(x: RepresentableSeq, y: RepresentableSeq, kinds):
    if x.kind != y.kind or x.kind not in kinds:
        allowed = "/".join(k.value for k in kinds)
        raise KindMismatchError(f"expected a pair of equal kinds among {allowed}")
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")


def tail_pseudometric(x: RepresentableSeq, y: RepresentableSeq, norm: Norm = SUP):
    """Tail pseudometric of two cluster-representable sequences.

    Deep tails equal the cluster sets, and every shallower tail contains them,
    so the defining infimum collapses to the Hausdorff distance between the
    two cluster sets under the chosen norm.
    """
    _check_pair(x, y, CLUSTER_KINDS)
    return hausdorff(cluster_set(x).points, cluster_set(y).points, norm)


# ---------------------------------------------------------------------------
# window oracle for the defining quantifiers


def _pair_distance(x: RepresentableSeq, y: RepresentableSeq, norm: Norm) -> Callable[[int, int], Fraction | float]:
    """Ambient-space distance ||x_i - y_j|| as a function of term indices."""
    if x.kind in CLUSTER_KINDS:
        return lambda i, j: norm.dist(x.core_term(i), y.core_term(j))
    if x.kind is SpaceKind.C0_SPIKE:
        def spike_dist(i: int, j: int):
            core = sup_norm(vec_sub(x.core_term(i), y.core_term(j)))
            si, sj = x.spike.term(i), y.spike.term(j)
            if i == j:
                return max(core, abs(si - sj))
            return max(core, abs(si), abs(sj))
        return spike_dist

    def tail_dist(i: int, j: int):
        core = sup_norm(vec_sub(x.core_term(i), y.core_term(j)))
        return max(core, abs(x.tail.term(i) - y.tail.term(j)))
    return tail_dist


def tail_pseudometric_bounds(x: RepresentableSeq, y: RepresentableSeq, horizon: int,
                             tail_index: int, norm: Norm = SUP,
                             resolution: Fraction | float = 0):
    """Certified [lo, hi] bounds on the tail pseudometric from finite windows.

    Evaluates sup_n inf_m of the two one-sided tail excesses on index windows
    sized by the joint cycle structure, asserting that each window agrees with
    the window one cycle deeper.  With ``tail_index`` past every preperiod and
    ``horizon`` covering the stabilized windows the bounds coincide and equal
    the exact pseudometric; under-sized parameters yield a conservative
    certified interval instead.  A positive ``resolution`` switches the final
    infimum over eps to a bisection of the containment predicate on an eps
    grid of that width (used for the non-exact Euclidean norm).
    """
    if not 1 <= tail_index <= horizon:
        raise ValueError("need horizon >= tail_index >= 1")
    _check_pair(x, y, CLUSTER_KINDS + (SpaceKind.C0_SPIKE, SpaceKind.C_TAIL, SpaceKind.LINF_TAIL))
    raw_dist = _pair_distance(x, y, norm)
    cache: dict[tuple[int, int], Fraction | float] = {}

    def dist(i: int, j: int):
        key = (i, j)
        val = cache.get(key)
        if val is None:
            val = cache[key] = raw_dist(i, j)
        return val

    stable = max(x.joint_preperiod_length(), y.joint_preperiod_length()) + 1
    cyc = math.lcm(x.joint_cycle_length(), y.joint_cycle_length())

    def excess(m: int, n: int, depth: int, flip: bool):
        i_end = m + depth - 1
        ii = range(m, i_end + 1)
        jj = range(n, i_end + 1)
        if flip:
            return max(min(dist(j, i) for j in jj) for i in ii)
        return max(min(dist(i, j) for j in jj) for i in ii)

    def two_sided(n: int, depth: int):
        m = max(stable, n)
        return max(excess(m, n, depth, False), excess(m, n, depth, True))

    n_star = stable
    needed = max(stable, n_star) + 3 * cyc - 1
    if horizon < needed:
        # window too shallow to certify stabilization: trivially certified bounds
        span = range(1, horizon + 1)
        hi = max(dist(i, j) for i in span for j in span)
        return Fraction(0), hi

    for n in (1, n_star):
        if two_sided(n, 2 * cyc) != two_sided(n, 3 * cyc):
            raise AssertionError("tail windows did not stabilize; representation bug")

    n_cap = min(tail_index, n_star)
    if resolution and norm.kind == "euclid":
        lo, hi = _bisect_eps(x, y, dist, stable, cyc, n_cap, resolution)
    else:
        lo = max(two_sided(n, 2 * cyc) for n in range(1, n_cap + 1))
        hi = lo
    if n_cap < n_star:
        hi = max(two_sided(n, 2 * cyc) for n in range(1, n_star + 1))
    return lo, hi


def _bisect_eps(x, y, dist, stable, cyc, n_cap, resolution):
    """Bisect the containment predicate 'every tail fits in the eps-fattened other'."""
    def fits(eps) -> bool:
        for n in range(1, n_cap + 1):
            m = max(stable, n)
            i_end = m + 2 * cyc - 1
            ii, jj = range(m, i_end + 1), range(n, i_end + 1)
            if any(min(dist(i, j) for j in jj) > eps for i in ii):
                return False
            if any(min(dist(j, i) for j in jj) > eps for i in ii):
                return False
        return True

    span = range(1, stable + 2 * cyc)
    hi = max(dist(i, j) for i in span for j in span)
    lo = 0.0
    hi = float(hi)
    if fits(lo):
        return 0.0, 0.0
    while hi - lo > float(resolution):
        mid = (lo + hi) / 2
        if fits(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def sup_distance_profile(seq: RepresentableSeq, z: Sequence, norm: Norm = SUP):
    """limsup_n ||x_n - z|| under an explicit norm, for cluster kinds."""
    if seq.kind not in CLUSTER_KINDS:
        raise KindMismatchError("profile supports cluster kinds")
    z = as_vector(z)
    return max(norm.dist(p, z) for p in cluster_set(seq).points)


def chebyshev_radius(points: FinitePointSet, norm: Norm):
    """Chebyshev radius of a finite set under sup/l1/poly norms, via LP.

    Euclidean inputs belong to the smallest-enclosing-ball solver instead.
    """
    from scipy.optimize import linprog
    import numpy as np

    if norm.kind == "euclid":
        raise ValueError("use smallest_enclosing_ball for the Euclidean norm")
    pts = [tuple(float(c) for c in p) for p in points.points]
    d = len(pts[0])
    rows = functional_rows(norm, d)
    # variables (y, r): minimize r s.t. +-<a, p - y> <= r for every point and row
    a_ub, b_ub = [], []
    for p in pts:
        for row in rows:
            for sgn in (1.0, -1.0):
                a_ub.append([sgn * c for c in row] + [-1.0])
                b_ub.append(sgn * sum(c * v for c, v in zip(row, p)))
    c_obj = [0.0] * d + [1.0]
    res = linprog(c_obj, A_ub=np.array(a_ub), b_ub=np.array(b_ub),
                  bounds=[(None, None)] * d + [(0, None)], method="highs")
    if not res.success:
        raise RuntimeError(f"Chebyshev LP failed: {res.message}")
    return tuple(res.x[:d]), float(res.x[d])


def functional_rows(norm: Norm, d: int) -> list[tuple[float, ...]]:
    if norm.kind == "sup":
        return [tuple(1.0 if i == j else 0.0 for j in range(d)) for i in range(d)]
    if norm.kind == "l1":
        rows = []
        for mask in range(2 ** d):
            rows.append(tuple(1.0 if mask >> j & 1 else -1.0 for j in range(d)))
        return rows
    if norm.kind == "poly":
        return [tuple(float(c) for c in row) for row in norm.matrix]
    raise ValueError("no functional rows for this norm")
