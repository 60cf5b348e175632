"""Seeded random instance generators shared by the test suite and the CLI.

Seed splitting: trial i of a campaign with master seed S uses the derived
seed ``S * 1_000_003 + i``.  The scheme is arithmetic on integers only, so
parallel and serial runs of the same campaign draw identical instances.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .envelopes import Envelope
from .sequences import RepresentableSeq, ScalarPeriodic, SpaceKind
from .tail_metric import Norm

SEED_STRIDE = 1_000_003


def split_seed(master: int, index: int) -> int:
    return master * SEED_STRIDE + index


def trial_rng(master: int, index: int) -> Random:
    return Random(split_seed(master, index))


def random_fraction(rng: Random, span: int = 8, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def random_vector(rng: Random, dim: int, span: int = 8) -> tuple[Fraction, ...]:
    return tuple(random_fraction(rng, span) for _ in range(dim))


def random_channel(rng: Random, max_pre: int = 2, max_cycle: int = 4) -> ScalarPeriodic:
    pre = tuple(random_fraction(rng) for _ in range(rng.randint(0, max_pre)))
    cyc = tuple(random_fraction(rng) for _ in range(rng.randint(1, max_cycle)))
    return ScalarPeriodic(pre, cyc)


def random_seq(rng: Random, kind: SpaceKind, max_dim: int = 4, max_cycle: int = 6,
               max_pre: int = 3, dim: int | None = None) -> RepresentableSeq:
    kind = SpaceKind(kind)
    if dim is None:
        dim = rng.randint(1, max_dim)
    pre = tuple(random_vector(rng, dim) for _ in range(rng.randint(0, max_pre)))
    cyc = tuple(random_vector(rng, dim) for _ in range(rng.randint(1, max_cycle)))
    spike = random_channel(rng) if kind is SpaceKind.C0_SPIKE else None
    tail = random_channel(rng) if kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL) else None
    return RepresentableSeq(kind, dim, pre, cyc, spike=spike, tail=tail)


def random_envelope(rng: Random, dim: int | None = None, max_dim: int = 5) -> Envelope:
    if dim is None:
        dim = rng.randint(1, max_dim)
    lower, upper = [], []
    for _ in range(dim):
        a, b = random_fraction(rng), random_fraction(rng)
        lower.append(min(a, b))
        upper.append(max(a, b))
    return Envelope(tuple(lower), tuple(upper))


def random_pointset(rng: Random, dim: int, max_points: int = 8) -> list[tuple[Fraction, ...]]:
    return [random_vector(rng, dim) for _ in range(rng.randint(1, max_points))]


def equivalent_pair(rng: Random, kind: SpaceKind = SpaceKind.SUP_FINITE,
                    max_dim: int = 3):
    """Two descriptions with identical cluster sets (tail pseudometric zero):
    same value set, independently shuffled cycles with repetitions and fresh
    preperiods."""
    base = random_seq(rng, kind, max_dim=max_dim)
    values = list(dict.fromkeys(base.cycle))

    def variant():
        cyc = list(values)
        for _ in range(rng.randint(0, 3)):
            cyc.append(rng.choice(values))
        rng.shuffle(cyc)
        pre = tuple(random_vector(rng, base.dim) for _ in range(rng.randint(0, 2)))
        return RepresentableSeq(kind, base.dim, pre, tuple(cyc))

    return variant(), variant()


def random_polyhedral_norm(rng: Random, dim: int, extra_rows: int = 2) -> Norm:
    """Random polyhedral norm; scaled identity rows keep the matrix full-rank."""
    rows = []
    for i in range(dim):
        scale = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        rows.append(tuple(scale if j == i else Fraction(0) for j in range(dim)))
    for _ in range(extra_rows):
        rows.append(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(dim)))
    return Norm("poly", tuple(rows))
