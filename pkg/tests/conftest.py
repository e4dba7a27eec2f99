import itertools
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from g2forge.forms import AltForm
from g2forge.scalar import Scalar

settings.register_profile("g2", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("g2")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(Scalar, small_fractions, small_fractions)
rational_scalars = st.builds(Scalar, small_fractions)


@st.composite
def forms(draw, degree=None, elements=rational_scalars, max_terms=5):
    k = draw(st.integers(0, 7)) if degree is None else degree
    keys = list(itertools.combinations(range(1, 8), k))
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True))
    return AltForm(k, {idx: draw(elements) for idx in chosen})


def frac(x) -> Fraction:
    return Fraction(x)
