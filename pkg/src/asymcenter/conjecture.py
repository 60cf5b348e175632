"""Exploratory search for sequence pairs indistinguishable under many norms.

A pair with tail pseudometric zero shares centers and radii under every
equivalent norm.  Whether the converse holds is open; this fuzzer samples
planar sequence pairs at positive pseudometric distance, then checks whether
any pair keeps equal radii and center sets under every norm in a sampled
family (Euclidean, sup, 1-norm, and random polyhedral norms).  Surviving
pairs are logged as candidates for closer inspection; nothing mathematical is
asserted either way.  The known example pair (alternating first coordinate vs
alternating second coordinate) survives the Euclidean norm and is separated
by the sup norm, which calibrates the detector.

Center sets are compared through support-function samples: for polyhedral
norms the center set is a polytope and each support value is a linear
program; for the Euclidean norm the center is a single point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .euclidean_center import smallest_enclosing_ball
from .sampling import random_polyhedral_norm, random_seq, trial_rng
from .sequences import RepresentableSeq, SpaceKind, cluster_set
from .tail_metric import (EUCLID, L1, SUP, Norm, chebyshev_radius, functional_rows,
                          tail_pseudometric)

RADIUS_TOL = 1e-7
SUPPORT_TOL = 1e-6


def _support_value(points, norm: Norm, radius: float, direction) -> float:
    """max <direction, y> over the center set {y : max_p ||p - y|| <= radius}."""
    pts = [tuple(float(c) for c in p) for p in points]
    d = len(pts[0])
    rows = functional_rows(norm, d)
    a_ub, b_ub = [], []
    pad = radius + 1e-9
    for p in pts:
        for row in rows:
            for sgn in (1.0, -1.0):
                a_ub.append([-sgn * c for c in row])
                b_ub.append(pad - sgn * sum(c * v for c, v in zip(row, p)))
    res = linprog([-float(x) for x in direction], A_ub=np.array(a_ub), b_ub=np.array(b_ub),
                  bounds=[(None, None)] * d, method="highs")
    if not res.success:
        raise RuntimeError(f"support LP failed: {res.message}")
    return -float(res.fun)


def _directions(dim: int, count: int = 8) -> list[tuple[float, ...]]:
    if dim == 2:
        return [(float(np.cos(2 * np.pi * k / count)), float(np.sin(2 * np.pi * k / count)))
                for k in range(count)]
    dirs = []
    for signs in itertools.product((1.0, -1.0), repeat=dim):
        dirs.append(signs)
    return dirs[:count]


def norms_agree(x: RepresentableSeq, y: RepresentableSeq, norm: Norm) -> bool:
    """Equal radii and (sampled) equal center sets under one norm."""
    px, py = cluster_set(x), cluster_set(y)
    if norm.kind == "euclid":
        bx = smallest_enclosing_ball(px)
        by = smallest_enclosing_ball(py)
        if abs(bx.radius - by.radius) > RADIUS_TOL:
            return False
        return max(abs(a - b) for a, b in zip(bx.center, by.center)) <= SUPPORT_TOL
    cx, rx = chebyshev_radius(px, norm)
    cy, ry = chebyshev_radius(py, norm)
    if abs(rx - ry) > RADIUS_TOL:
        return False
    for u in _directions(px.dim):
        sx = _support_value(px.points, norm, rx, u)
        sy = _support_value(py.points, norm, ry, u)
        if abs(sx - sy) > SUPPORT_TOL:
            return False
    return True


@dataclass
class ConjectureReport:
    trials: int
    norm_family_size: int
    seed: int
    examined: int = 0
    candidates: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "norm_family_size": self.norm_family_size,
            "seed": self.seed,
            "examined": self.examined,
            "candidates": self.candidates,
        }


def conjecture_search(trials: int, seed: int, norm_family_size: int = 6) -> ConjectureReport:
    """Sample planar pairs with positive pseudometric and hunt for near-misses."""
    report = ConjectureReport(trials=trials, norm_family_size=norm_family_size, seed=seed)
    for i in range(trials):
        rng = trial_rng(seed, i)
        x = random_seq(rng, SpaceKind.EUCLIDEAN, dim=2, max_cycle=4, max_pre=1)
        y = random_seq(rng, SpaceKind.EUCLIDEAN, dim=2, max_cycle=4, max_pre=1)
        if tail_pseudometric(x, y, EUCLID) <= 0:
            continue
        report.examined += 1
        norms = [EUCLID, SUP, L1]
        while len(norms) < norm_family_size:
            norms.append(random_polyhedral_norm(rng, 2))
        if all(norms_agree(x, y, nm) for nm in norms):
            from .instances import seq_to_json_dict
            report.candidates.append({"trial": i,
                                      "x": seq_to_json_dict(x),
                                      "y": seq_to_json_dict(y)})
    return report
