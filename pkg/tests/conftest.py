import hypothesis.strategies as st
from hypothesis import settings

from perichar.laurent import LaurentPolynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def polys(nvars, max_terms=5, exp=3, coef=5):
    exps = st.tuples(*[st.integers(-exp, exp)] * nvars)
    return st.dictionaries(exps, st.integers(-coef, coef), max_size=max_terms).map(
        lambda d: LaurentPolynomial(nvars, d))


def dominant(n, bound=2):
    return st.lists(st.integers(-bound, bound), min_size=n, max_size=n).map(
        lambda v: tuple(sorted(v, reverse=True)))


def poly(n, terms):
    return LaurentPolynomial(n, terms)
