from fractions import Fraction

from hypothesis import strategies as st

from grossone.core import GrossNumber

digits = st.fractions(min_value=-50, max_value=50, max_denominator=12).filter(bool)
small_ints = st.integers(min_value=-3, max_value=3)
finite_powers = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 2, 3]))

grossnumbers = st.lists(st.tuples(finite_powers, digits), max_size=5).map(GrossNumber)

# integer powers only: safe for the substitution oracle with q = 1
polynomial_like = st.lists(st.tuples(small_ints, digits), max_size=4).map(GrossNumber)

nested = st.recursive(
    grossnumbers,
    lambda inner: st.lists(st.tuples(inner | finite_powers, digits), max_size=3).map(GrossNumber),
    max_leaves=6,
)

integer_gross = st.lists(
    st.tuples(st.integers(1, 4), st.fractions(-20, 20, max_denominator=6).filter(bool)), max_size=3
).flatmap(
    lambda terms: st.integers(-100, 100).map(lambda c: GrossNumber(terms + [(0, c)]))
)
