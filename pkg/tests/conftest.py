from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from epoly.polycore import Poly2, PolyX, TruncSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def poly2s(max_exp=3, max_terms=4, coeffs=small_rationals):
    keys = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp))
    return st.dictionaries(keys, coeffs, max_size=max_terms).map(Poly2)


def polyxs(max_exp=4, max_terms=4, coeffs=small_rationals):
    keys = st.tuples(st.integers(0, max_exp))
    return st.dictionaries(keys, coeffs, max_size=max_terms).map(PolyX)


@st.composite
def series(draw, order=None, constant=0, max_exp=2):
    if order is None:
        order = draw(st.integers(0, 6))
    body = [draw(poly2s(max_exp=max_exp, max_terms=3)) for _ in range(order)]
    return TruncSeries([Poly2.constant(constant)] + body, order)
