"""Independent brute-force solvers used to validate every closed form.

Nothing here shares code with the closed-form paths it checks: envelopes and
window scalars are recomputed from a raw expansion table of x_n(k) values,
sup-norm radii from one-dimensional interval reasoning on those expansion
envelopes, and Euclidean radii from subgradient descent plus a dual
simplex-gradient refinement carrying a duality-gap certificate.  Oracles are
deliberately slower than the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .envelopes import Envelope
from .sequences import (
    FinitePointSet,
    KindMismatchError,
    RepresentableSeq,
    SpaceKind,
    asymptotic_distance,
)

SUP_KINDS = (SpaceKind.SUP_FINITE, SpaceKind.C0_SPIKE, SpaceKind.C_TAIL, SpaceKind.LINF_TAIL)


@dataclass(frozen=True)
class OracleResult:
    value: Fraction | float | None
    argmin: tuple | None
    resolution: Fraction | float
    method: str
    envelope: Envelope | None = None

    def to_json_dict(self) -> dict:
        val = self.value
        if isinstance(val, float):
            val = f"{val:.12g}"
        elif val is not None:
            val = str(val)
        return {
            "value": val,
            "argmin": None if self.argmin is None else [str(x) for x in self.argmin],
            "resolution": str(self.resolution),
            "method": self.method,
        }


# ---------------------------------------------------------------------------
# expansion windows


def _window_bounds(seq: RepresentableSeq, horizon: int) -> tuple[int, int]:
    pre = seq.joint_preperiod_length()
    cyc = seq.joint_cycle_length()
    if horizon < pre + 2 * cyc:
        raise ValueError(f"horizon {horizon} < preperiod + 2 joint cycles = {pre + 2 * cyc}")
    return pre + 1, cyc


def _columns(seq: RepresentableSeq, horizon: int) -> list[int]:
    if seq.kind is SpaceKind.SUP_FINITE:
        return list(range(1, seq.dim + 1))
    if seq.kind is SpaceKind.C0_SPIKE:
        return list(range(1, seq.dim + horizon + 1))
    # tail kinds: all columns beyond dim behave identically; keep a couple
    return list(range(1, seq.dim + 3))


def _col_range(seq: RepresentableSeq, k: int, m: int, n_end: int):
    vals = [seq.term_coord(n, k) for n in range(m, n_end + 1)]
    return min(vals), max(vals)


def _alpha_window(seq, m: int, n_end: int, cols) -> Fraction:
    best = Fraction(0)
    for k in cols:
        lo, hi = _col_range(seq, k, m, n_end)
        best = max(best, hi - lo)
    return best


def _beta_window(seq, m: int, n_end: int, cols) -> Fraction:
    # per-column eventual oscillation: slide a cycle-long window down the column
    # until two consecutive windows agree (spike columns go quiet once their
    # single nonzero row has passed)
    cyc = seq.joint_cycle_length()
    best = Fraction(0)
    for k in cols:
        start = m
        while True:
            if start + 2 * cyc - 1 > n_end:
                raise AssertionError("beta window did not stabilize within the horizon")
            lo1, hi1 = _col_range(seq, k, start, start + cyc - 1)
            lo2, hi2 = _col_range(seq, k, start + cyc, start + 2 * cyc - 1)
            if (lo1, hi1) == (lo2, hi2):
                break
            start += cyc
        best = max(best, hi1 - lo1)
    return best


def _joint_window(seq, m: int, n_end: int, cols):
    ks = [k for k in cols if k >= m]
    if seq.kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL):
        # all columns beyond dim are identical; keep the window two columns wide
        ks = [m, m + 1]
    if not ks:
        raise KindMismatchError("joint windows need coordinates beyond the window start")
    vals = [seq.term_coord(n, k) for n in range(m, n_end + 1) for k in ks]
    return min(vals), max(vals), max(abs(v) for v in vals)


def window_oracle(seq: RepresentableSeq, quantity: str, horizon: int) -> OracleResult:
    """Evaluate a window scalar or the envelope from a raw expansion table.

    Supported quantities: alpha, beta, gamma, delta, envelope.  Each limit is
    evaluated on two windows one joint cycle apart; disagreement raises,
    signalling a representation bug rather than a numeric issue.
    """
    if seq.kind not in SUP_KINDS:
        raise KindMismatchError("window oracle expects a sup-norm kind")
    m0, cyc = _window_bounds(seq, horizon)
    cols = _columns(seq, horizon)
    n_end = horizon

    if quantity == "alpha":
        v1 = _alpha_window(seq, m0, n_end, cols)
        v2 = _alpha_window(seq, m0 + cyc, n_end, cols)
        if v1 != v2:
            raise AssertionError("alpha window did not stabilize")
        return OracleResult(v1, None, Fraction(0), "truncation")
    if quantity == "beta":
        return OracleResult(_beta_window(seq, m0, n_end, cols), None, Fraction(0), "truncation")
    if quantity in ("gamma", "delta"):
        mg = max(m0, seq.dim + 1)
        if n_end < mg + 2 * cyc:
            raise ValueError("horizon too small for the joint window")
        lo1, hi1, ab1 = _joint_window(seq, mg, n_end, cols)
        lo2, hi2, ab2 = _joint_window(seq, mg + cyc, n_end, cols)
        if (lo1, hi1, ab1) != (lo2, hi2, ab2):
            raise AssertionError("joint window did not stabilize")
        value = hi1 - lo1 if quantity == "gamma" else ab1
        return OracleResult(value, None, Fraction(0), "truncation")
    if quantity == "envelope":
        env = window_envelope(seq, horizon)
        return OracleResult(None, None, Fraction(0), "truncation", envelope=env)
    raise ValueError(f"unknown quantity {quantity!r}")


def window_envelope(seq: RepresentableSeq, horizon: int) -> Envelope:
    """Per-coordinate limsup/liminf (and the pair at infinity for spike kinds)
    recomputed from expanded terms, never from the cycle description."""
    m0, cyc = _window_bounds(seq, horizon)
    lower, upper = [], []
    for k in range(1, seq.dim + 1):
        lo1, hi1 = _col_range(seq, k, m0, m0 + cyc - 1)
        lo2, hi2 = _col_range(seq, k, m0 + cyc, m0 + 2 * cyc - 1)
        if (lo1, hi1) != (lo2, hi2):
            raise AssertionError("envelope window did not stabilize")
        lower.append(lo1)
        upper.append(hi1)
    infinity = None
    if seq.kind is SpaceKind.C0_SPIKE:
        cols = _columns(seq, horizon)
        mg = max(m0, seq.dim + 1)
        if horizon < mg + 2 * cyc:
            raise ValueError("horizon too small for the window at infinity")
        lo1, hi1, _ = _joint_window(seq, mg, horizon, cols)
        lo2, hi2, _ = _joint_window(seq, mg + cyc, horizon, cols)
        if (lo1, hi1) != (lo2, hi2):
            raise AssertionError("infinity window did not stabilize")
        infinity = (lo1, hi1)
    return Envelope(tuple(lower), tuple(upper), infinity=infinity)


# ---------------------------------------------------------------------------
# sup-norm radius by one-dimensional interval reasoning


def supnorm_radius_oracle(seq: RepresentableSeq, horizon: int | None = None) -> OracleResult:
    """Exact asymptotic radius of a sup-norm sequence, coordinates decoupled.

    Envelopes come from the expansion windows; each coordinate then
    contributes its half-gap, the spike model adds the constraint at infinity,
    and the tail models add the half-gap of the tail channel.  The argmin is
    one optimal center (midpoints, or the zero-clamp for the spike model;
    tail models append the tail midpoint).
    """
    if seq.kind not in SUP_KINDS:
        raise KindMismatchError("supnorm_radius_oracle expects a sup-norm kind")
    pre = seq.joint_preperiod_length()
    cyc = seq.joint_cycle_length()
    if horizon is None:
        horizon = pre + max(seq.dim + 1, pre + 1) + 3 * cyc
    env = window_envelope(seq, horizon)
    half = max((up - lo for lo, up in zip(env.lower, env.upper)), default=Fraction(0)) / 2

    if seq.kind is SpaceKind.SUP_FINITE:
        value = half
        argmin = tuple((lo + up) / 2 for lo, up in zip(env.lower, env.upper))
        return OracleResult(value, argmin, Fraction(0), "coordinate_exact")

    if seq.kind is SpaceKind.C0_SPIKE:
        inf_lo, inf_up = env.infinity
        value = max(half, inf_up, -inf_lo)
        argmin = tuple(min(lo + value, max(up - value, Fraction(0)))
                       for lo, up in zip(env.lower, env.upper))
        return OracleResult(value, argmin, Fraction(0), "coordinate_exact")

    # tail kinds: the channel behaves as one more decoupled coordinate
    m0 = pre + 1
    tail_vals = [seq.tail.term(n) for n in range(m0, m0 + cyc)]
    tail_lo, tail_hi = min(tail_vals), max(tail_vals)
    value = max(half, (tail_hi - tail_lo) / 2)
    argmin = tuple((lo + up) / 2 for lo, up in zip(env.lower, env.upper))
    argmin = argmin + ((tail_lo + tail_hi) / 2,)
    return OracleResult(value, argmin, Fraction(0), "coordinate_exact")


def grid_radius_oracle(seq: RepresentableSeq, step: Fraction | None = None) -> OracleResult:
    """Minimize the asymptotic distance over a rational grid of candidate centers.

    The distance functional is 1-Lipschitz for the sup norm, so the grid
    minimum is an upper bound on the radius within step/2; with the exact
    closed form r this yields the two-sided sandwich r <= grid <= r + step/2.
    Default step: a quarter of the largest coordinate magnitude.
    """
    if seq.kind not in (SpaceKind.SUP_FINITE, SpaceKind.C0_SPIKE):
        raise KindMismatchError("grid oracle supports sup_finite and c0_spike")
    bound = max((max(abs(x) for x in v) for v in seq.preperiod + seq.cycle), default=Fraction(0))
    if seq.spike is not None:
        bound = max(bound, max(abs(x) for x in seq.spike.preperiod + seq.spike.cycle))
    if step is None:
        step = bound / 4 if bound > 0 else Fraction(1)
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    ticks = []
    t = -bound
    while t <= bound:
        ticks.append(t)
        t += step
    if not ticks or ticks[-1] < bound:
        ticks.append(bound)

    best = None
    best_y = None
    dim = seq.dim
    idx = [0] * dim
    while True:
        y = tuple(ticks[i] for i in idx)
        v = asymptotic_distance(seq, y)
        if best is None or v < best:
            best, best_y = v, y
        pos = dim - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < len(ticks):
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return OracleResult(best, best_y, step / 2, "grid")


# ---------------------------------------------------------------------------
# Euclidean radius: subgradient descent + certified dual refinement


def _subgradient_stage(pts: np.ndarray, rounds: int, iters: int) -> tuple[np.ndarray, float]:
    """Restarted subgradient descent on y -> max_p ||p - y||, step c/sqrt(t).

    Starts from the centroid with c set to the initial value; each restart
    resumes from the best point seen and halves c.
    """
    y = pts.mean(axis=0)
    dd = np.sqrt(np.sum((pts - y) ** 2, axis=1))
    fbest = float(dd.max())
    ybest = y.copy()
    c = max(fbest, 1e-12)
    for _ in range(rounds):
        y = ybest.copy()
        for t in range(1, iters + 1):
            diff = y - pts
            dd = np.sqrt(np.sum(diff * diff, axis=1))
            i = int(np.argmax(dd))
            f = float(dd[i])
            if f < fbest:
                fbest, ybest = f, y.copy()
            if f <= 0.0:
                return ybest, fbest
            y = y - (c / math.sqrt(t)) * (diff[i] / f)
        c *= 0.5
    return ybest, fbest


def _dual_refine(pts: np.ndarray, start: np.ndarray, iters: int = 5000,
                 gap_tol: float = 1e-13) -> tuple[np.ndarray, float, float]:
    """Pairwise simplex ascent on the dual of the enclosing-ball problem.

    Maximizes sum(w_i ||p_i||^2) - ||sum w_i p_i||^2 over the simplex by
    transferring weight from the worst supported vertex to the best vertex
    with exact line search (the classic pairwise scheme for this QP).  The
    primal center is the weighted mean, and the dual value lower-bounds the
    squared radius, certifying the result.  Returns (center, radius, dual value).
    """
    m = len(pts)
    pp = np.einsum("ij,ij->i", pts, pts)
    d0 = np.sum((pts - start) ** 2, axis=1)
    w = np.zeros(m)
    w[int(np.argmax(d0))] = 1.0
    c = pts[int(np.argmax(d0))].astype(float).copy()
    for _ in range(iters):
        grad = pp - 2.0 * (pts @ c)
        i_fw = int(np.argmax(grad))
        gap_fw = grad[i_fw] - float(w @ grad)
        if gap_fw <= gap_tol:
            break
        sup = np.flatnonzero(w > 0)
        i_aw = int(sup[np.argmin(grad[sup])])
        if i_fw == i_aw:
            break
        direction = pts[i_fw] - pts[i_aw]
        denom = float(direction @ direction)
        if denom <= 0.0:
            break
        s = min(float(w[i_aw]), (grad[i_fw] - grad[i_aw]) / (2.0 * denom))
        if s <= 0.0:
            break
        w[i_fw] += s
        w[i_aw] -= s
        if w[i_aw] < 1e-17:
            w[i_aw] = 0.0
        c = w @ pts
    r2 = float(np.max(np.sum((pts - c) ** 2, axis=1)))
    dual = float(pp @ w - c @ c)
    return c, math.sqrt(max(r2, 0.0)), dual


def euclidean_radius_oracle(points, seed: int = 0, rounds: int = 8,
                            iters: int = 25) -> OracleResult:
    """Radius of the smallest enclosing ball, independent of the combinatorial solver.

    A restarted subgradient stage (step c/sqrt(t) from the centroid) is
    polished by the dual refinement; the duality gap is folded into the
    reported resolution, which stays well below 1e-6.
    """
    pset = points if isinstance(points, FinitePointSet) else FinitePointSet(tuple(points))
    if len(pset) == 0:
        raise ValueError("empty point set")
    pts = np.array([[float(c) for c in p] for p in pset.points])
    if len(pts) == 1:
        return OracleResult(0.0, tuple(pts[0]), 0.0, "subgradient")
    ybest, fbest = _subgradient_stage(pts, rounds, iters)
    c, r, dual = _dual_refine(pts, ybest)
    if r > fbest:
        c, r = ybest, fbest
    # the dual value lower-bounds the squared optimum: certified accuracy of r
    resolution = max(r - math.sqrt(max(dual, 0.0)), 0.0)
    assert resolution <= 1e-6 * (1.0 + r)
    return OracleResult(float(r), tuple(float(v) for v in c), resolution, "subgradient")


def euclidean_radius_oracle_batch(pointsets: Sequence[Sequence[Sequence[float]]],
                                  rounds: int = 8, iters: int = 25) -> np.ndarray:
    """Vectorized variant of the Euclidean oracle for large fuzz campaigns.

    Runs the identical subgradient schedule on all instances at once (padded
    arrays), then the dual refinement per instance.
    """
    sizes = [len(ps) for ps in pointsets]
    dims = [len(ps[0]) for ps in pointsets]
    mmax, dmax = max(sizes), max(dims)
    batch = len(pointsets)
    pts = np.zeros((batch, mmax, dmax))
    mask = np.full((batch, mmax), -np.inf)
    y = np.zeros((batch, dmax))
    for b, ps in enumerate(pointsets):
        arr = np.asarray(ps, dtype=float)
        pts[b, :sizes[b], :dims[b]] = arr
        pts[b, sizes[b]:, :dims[b]] = arr[0]
        mask[b, :sizes[b]] = 0.0
        y[b, :dims[b]] = arr.mean(axis=0)
    dd = np.sqrt(np.sum((pts - y[:, None, :]) ** 2, axis=2)) + mask
    fbest = dd.max(axis=1)
    ybest = y.copy()
    c = np.maximum(fbest, 1e-12)
    rows = np.arange(batch)
    for _ in range(rounds):
        y = ybest.copy()
        for t in range(1, iters + 1):
            diff = y[:, None, :] - pts
            dd = np.sqrt(np.sum(diff * diff, axis=2)) + mask
            idx = np.argmax(dd, axis=1)
            f = dd[rows, idx] - mask[rows, idx]
            improved = f < fbest
            fbest = np.where(improved, f, fbest)
            ybest = np.where(improved[:, None], y, ybest)
            g = diff[rows, idx]
            norms = np.maximum(f, 1e-300)
            y = y - (c / math.sqrt(t))[:, None] * (g / norms[:, None])
        c *= 0.5

    out = np.empty(batch)
    for b in range(batch):
        arr = pts[b, :sizes[b], :dims[b]]
        _, r, _ = _dual_refine(arr, ybest[b, :dims[b]])
        out[b] = min(r, float(fbest[b]))
    return out
