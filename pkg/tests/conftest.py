import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from pfaffstringy.qalgebra import LaurentPoly, RatFunc  # noqa: E402

coeff = st.integers(-20, 20)


@st.composite
def laurent(draw, max_len=6, lo=-4, hi=4):
    low = draw(st.integers(lo, hi))
    cs = draw(st.lists(coeff, max_size=max_len))
    return LaurentPoly.from_coeffs(cs, low)


@st.composite
def nonzero_poly(draw, max_len=4):
    p = draw(laurent(max_len=max_len))
    return p if p else LaurentPoly(1)


@st.composite
def ratfunc(draw):
    return RatFunc(draw(laurent()), draw(nonzero_poly()))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
