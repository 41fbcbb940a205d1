"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from qhomology.field import make_field

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


def rationals(bound=6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


@st.composite
def scalars(draw, field):
    return field.from_coords([draw(rationals()) for _ in range(field.degree)])


@st.composite
def field_and_scalars(draw, k=3):
    F = make_field(draw(st.sampled_from(ORDERS)))
    return F, [draw(scalars(F)) for _ in range(k)]


@st.composite
def matrices(draw, field, max_rows=4, max_cols=4, entry=3):
    from qhomology.linalg import ExactMatrix
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = [[field(draw(st.integers(-entry, entry))) for _ in range(c)] for _ in range(r)]
    return ExactMatrix.from_rows(rows, field, c)
