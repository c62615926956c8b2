"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from dyckdiv import PositiveSet, singular_values

small_rationals = st.builds(Fraction, st.integers(1, 50), st.integers(1, 50))
positive_sets = st.lists(small_rationals, max_size=12).map(lambda xs: PositiveSet(tuple(xs)))
nonempty_sets = st.lists(small_rationals, min_size=1, max_size=12).map(lambda xs: PositiveSet(tuple(xs)))
lambdas = st.integers(1, 49).flatmap(lambda q: st.integers(q + 1, 50).map(lambda p: Fraction(p, q)))


@st.composite
def set_and_lambda(draw, singular=None):
    """A set plus a lambda; ``singular=True`` forces lambda to be one of the
    set's singular values (the set then has at least two elements)."""
    if singular:
        S = draw(st.lists(small_rationals, min_size=2, max_size=12, unique=True).map(lambda xs: PositiveSet(tuple(xs))))
        lam = draw(st.sampled_from(singular_values(S).elements))
    else:
        S = draw(positive_sets)
        lam = draw(lambdas)
    return S, lam
