from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from corona_spectra.algebra import Matrix, Polynomial
from corona_spectra.digraph import Digraph

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def int_matrices(draw, min_n=1, max_n=5, bound=4):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n))
    return Matrix([vals[i * n : (i + 1) * n] for i in range(n)], n)


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polynomials(draw, max_degree=5):
    coeffs = draw(st.lists(fractions, max_size=max_degree + 1))
    return Polynomial(coeffs)


def frac(x) -> Fraction:
    return Fraction(x)
