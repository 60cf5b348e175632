from fractions import Fraction

import hypothesis.strategies as st

from asymcenter import RepresentableSeq, ScalarPeriodic, SpaceKind

fractions_st = st.fractions(min_value=Fraction(-8), max_value=Fraction(8), max_denominator=4)


def vectors_st(dim: int):
    return st.tuples(*([fractions_st] * dim))


@st.composite
def seqs_st(draw, kinds=(SpaceKind.SUP_FINITE,), max_dim=3, max_cycle=4, max_pre=2):
    kind = draw(st.sampled_from(list(kinds)))
    dim = draw(st.integers(1, max_dim))
    pre = draw(st.lists(vectors_st(dim), min_size=0, max_size=max_pre))
    cyc = draw(st.lists(vectors_st(dim), min_size=1, max_size=max_cycle))
    spike = tail = None
    if kind is SpaceKind.C0_SPIKE:
        spike = ScalarPeriodic(
            tuple(draw(st.lists(fractions_st, min_size=0, max_size=2))),
            tuple(draw(st.lists(fractions_st, min_size=1, max_size=3))),
        )
    elif kind in (SpaceKind.C_TAIL, SpaceKind.LINF_TAIL):
        tail = ScalarPeriodic(
            tuple(draw(st.lists(fractions_st, min_size=0, max_size=2))),
            tuple(draw(st.lists(fractions_st, min_size=1, max_size=3))),
        )
    return RepresentableSeq(kind, dim, tuple(pre), tuple(cyc), spike=spike, tail=tail)
