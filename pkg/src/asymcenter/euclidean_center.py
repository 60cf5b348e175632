"""Euclidean asymptotic centers via the smallest enclosing ball.

The asymptotic center of a Euclidean representable sequence is the Chebyshev
center of its cluster set, computed with the classic randomized move-to-front
recursion.  The solver certifies itself on every call: all points covered
within tolerance, and the support points (those on the boundary sphere)
witness minimality because the center lies in their convex hull.

Also here: the far-subsequence restriction (dropping terms well inside the
ball preserves center and radius), the center-in-hull check, and the
Holder-type bounds relating center displacement to the tail pseudometric /
Hausdorff distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .sequences import (
    FinitePointSet,
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    cluster_set,
)
from .tail_metric import EUCLID, hausdorff

COVER_TOL = 1e-9
SUPPORT_TOL = 1e-7
HULL_TOL = 1e-7


@dataclass(frozen=True)
class BallCenter:
    """Smallest enclosing ball: center, radius and the boundary support points."""

    center: tuple[float, ...]
    radius: float
    support: tuple[tuple[float, ...], ...]

    def to_json_dict(self) -> dict:
        fmt = lambda v: [f"{x:.12g}" for x in v]
        return {
            "center": fmt(self.center),
            "radius": f"{self.radius:.12g}",
            "support": [fmt(p) for p in self.support],
        }


def _circumsphere(pts: list[np.ndarray]) -> tuple[np.ndarray, float]:
    """Center and squared radius of the sphere through <= dim+1 points."""
    if len(pts) == 1:
        return pts[0], 0.0
    base = pts[0]
    u = np.array([p - base for p in pts[1:]])
    gram = u @ u.T
    rhs = 0.5 * np.einsum("ij,ij->i", u, u)
    try:
        coef = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        coef, *_ = np.linalg.lstsq(gram, rhs, rcond=None)
    c = base + coef @ u
    r2 = float(max(np.sum((np.asarray(pts) - c) ** 2, axis=1)))
    return c, r2


def _welzl(pts: list[np.ndarray], dim: int, rng: Random) -> tuple[np.ndarray, float]:
    order = list(range(len(pts)))
    rng.shuffle(order)

    def solve(end: int, boundary: list[int]) -> tuple[np.ndarray, float] | None:
        ball = _circumsphere([pts[i] for i in boundary]) if boundary else None
        if len(boundary) == dim + 1:
            return ball
        i = 0
        while i < end:
            k = order[i]
            p = pts[k]
            inside = ball is not None and float(np.sum((p - ball[0]) ** 2)) <= ball[1] * (1 + 1e-12) + 1e-14
            if not inside:
                ball = solve(i, boundary + [k])
                order.pop(i)
                order.insert(0, k)
            i += 1
        return ball

    ball = solve(len(order), [])
    if ball is None:
        raise ValueError("empty point set")
    return ball


def smallest_enclosing_ball(points, seed: int = 0) -> BallCenter:
    """Smallest enclosing ball of a finite point set (move-to-front recursion).

    Points are deduplicated and canonically ordered before the seeded shuffle,
    so equal point sets produce bitwise-identical results regardless of the
    input order.  Support points are reported lowest-index first.
    """
    if isinstance(points, FinitePointSet):
        pset = points
    else:
        pset = FinitePointSet(tuple(points))
    if len(pset) == 0:
        raise ValueError("empty point set")
    pts = [np.array([float(c) for c in p]) for p in pset.points]
    c, r2 = _welzl(pts, len(pts[0]), Random(seed))
    r = math.sqrt(max(r2, 0.0))
    scale = 1.0 + r
    dists = [float(np.linalg.norm(p - c)) for p in pts]
    assert all(d <= r + COVER_TOL * scale for d in dists), "enclosing ball fails to cover"
    support = tuple(tuple(float(x) for x in p)
                    for p, d in zip(pts, dists) if abs(d - r) <= SUPPORT_TOL * scale)
    return BallCenter(center=tuple(float(x) for x in c), radius=r, support=support)


def distance_to_hull(point: Sequence[float], pts: Sequence[Sequence[float]]) -> float:
    """Euclidean distance from a point to the convex hull of finitely many points."""
    target = np.asarray(point, dtype=float)
    mat = np.asarray(pts, dtype=float)
    m = len(mat)
    if m == 1:
        return float(np.linalg.norm(mat[0] - target))

    def objective(lam):
        diff = lam @ mat - target
        return float(diff @ diff)

    def gradient(lam):
        diff = lam @ mat - target
        return 2.0 * (mat @ diff)

    res = minimize(objective, np.full(m, 1.0 / m), jac=gradient, method="SLSQP",
                   bounds=[(0.0, 1.0)] * m,
                   constraints=[{"type": "eq", "fun": lambda lam: lam.sum() - 1.0,
                                 "jac": lambda lam: np.ones(m)}],
                   options={"maxiter": 300, "ftol": 1e-16})
    return math.sqrt(max(res.fun, 0.0))


def _require_euclidean(seq: RepresentableSeq, what: str):
    if seq.kind is not SpaceKind.EUCLIDEAN:
        raise KindMismatchError(f"{what} expects a euclidean sequence, got {seq.kind.value}")


def far_subsequence(seq: RepresentableSeq, eps: float, seed: int = 0) -> RepresentableSeq:
    """Restrict to the cycle positions farther than (radius - eps) from the center.

    The set of far positions is never empty (some cluster point attains the
    radius); the restriction is asserted to keep the asymptotic center and
    radius within 1e-9.
    """
    _require_euclidean(seq, "far_subsequence")
    if eps <= 0:
        raise ValueError("eps must be positive")
    ball = smallest_enclosing_ball(cluster_set(seq), seed=seed)
    c = np.asarray(ball.center)
    kept = tuple(v for v in seq.cycle
                 if float(np.linalg.norm(np.array([float(x) for x in v]) - c)) > ball.radius - eps)
    assert kept, "no far positions: contradicts radius attainment on the cluster set"
    out = RepresentableSeq(SpaceKind.EUCLIDEAN, seq.dim, (), kept)
    ball2 = smallest_enclosing_ball(cluster_set(out), seed=seed)
    scale = 1.0 + ball.radius
    assert abs(ball2.radius - ball.radius) <= 1e-9 * scale
    assert max(abs(a - b) for a, b in zip(ball2.center, ball.center)) <= 1e-9 * scale
    return out


def center_hull_distance(seq: RepresentableSeq, eps: float, seed: int = 0) -> float:
    """Distance from the asymptotic center to the hull of the far cluster points.

    The center always lies in that hull, so the returned distance is tiny
    (<= 1e-7); it is returned rather than asserted so fuzz reports can log it.
    """
    _require_euclidean(seq, "center_hull_distance")
    if eps <= 0:
        raise ValueError("eps must be positive")
    ball = smallest_enclosing_ball(cluster_set(seq), seed=seed)
    c = np.asarray(ball.center)
    far = [tuple(float(x) for x in v) for v in cluster_set(seq).points
           if float(np.linalg.norm(np.array([float(x) for x in v]) - c)) >= ball.radius - eps]
    return distance_to_hull(ball.center, far)


def holder_center_bound(x: RepresentableSeq, y: RepresentableSeq, seed: int = 0) -> float:
    """Slack of the Holder-type center bound for two Euclidean sequences.

    Returns d*(r1 + r2 + d) - ||c1 - c2||^2 where d is the tail pseudometric;
    the bound guarantees the slack is nonnegative (asserted >= -1e-7).
    """
    _require_euclidean(x, "holder_center_bound")
    _require_euclidean(y, "holder_center_bound")
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    b1 = smallest_enclosing_ball(cluster_set(x), seed=seed)
    b2 = smallest_enclosing_ball(cluster_set(y), seed=seed)
    d = float(hausdorff(cluster_set(x).points, cluster_set(y).points, EUCLID))
    shift2 = float(sum((a - b) ** 2 for a, b in zip(b1.center, b2.center)))
    slack = d * (b1.radius + b2.radius + d) - shift2
    assert slack >= -HULL_TOL
    return slack


def set_center_shift_bound(a_points, b_points, seed: int = 0) -> float:
    """Slack of the analogous bound for Chebyshev centers of two bounded sets."""
    a_set = a_points if isinstance(a_points, FinitePointSet) else FinitePointSet(tuple(a_points))
    b_set = b_points if isinstance(b_points, FinitePointSet) else FinitePointSet(tuple(b_points))
    if len(a_set) == 0 or len(b_set) == 0:
        raise ValueError("empty point set")
    if a_set.dim != b_set.dim:
        raise ValueError("dimension mismatch")
    b1 = smallest_enclosing_ball(a_set, seed=seed)
    b2 = smallest_enclosing_ball(b_set, seed=seed)
    dh = float(hausdorff(a_set.points, b_set.points, EUCLID))
    shift2 = float(sum((a - b) ** 2 for a, b in zip(b1.center, b2.center)))
    slack = dh * (b1.radius + b2.radius + dh) - shift2
    assert slack >= -HULL_TOL
    return slack
