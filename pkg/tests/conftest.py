"""Shared den fixtures and the random-den strategy used across test modules."""

import itertools
from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from catalanimal_lab.dens import Den, Nest, iter_nests, validate
from catalanimal_lab.exactnum import EpsReal

HALF_UP = EpsReal(Fraction(1, 2), 1)


def worked_den():
    return Den(4, HALF_UP, (3, 2, 2, 1, -1), (1, 2, 2, 1, 1))


def generic_den():
    return Den(
        7, EpsReal(1, 1), (9, 7, 6, 5, 4, 3, 2, 0), (8, 6, 4, 5, 5, 3, 3, 2)
    )


def generic_left_nest():
    return Nest(generic_den(), ((1,), (1,), (1,), (1, 1, 1), (), ()))


def single_column_den():
    return Den(1, HALF_UP, (1, -1), (0, 0))


def abandoned_den():
    return Den(2, HALF_UP, (1, 0, 0), (0, 0, 1))


def thin_den():
    return Den(3, HALF_UP, (2, 1, 1, 0), (1, 1, 1, 1))


@st.composite
def small_dens(draw, max_h=4, max_paths=3):
    h = draw(st.integers(1, max_h))
    r = draw(
        st.sampled_from(
            [Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2)]
        )
    )
    sign = draw(st.sampled_from([1, -1]))
    peak_at = draw(st.integers(1, h))
    g = []
    cur = draw(st.integers(1, max_paths))
    for k in range(1, h + 1):
        if k < peak_at:
            cur = min(max_paths, cur + draw(st.integers(0, 1)))
        elif k > peak_at:
            cur = max(1, cur - draw(st.integers(0, 1)))
        g.append(cur)
    diffs = [g[0]] + [g[k] - g[k - 1] for k in range(1, h)] + [-g[-1]]
    e = [0, draw(st.integers(0, 2))]
    for _ in range(2, h + 1):
        e.append(e[-1] + draw(st.integers(0, 1)))
    e[0] = e[1] + draw(st.integers(-1, 1))
    d = tuple(e[i] + diffs[i] for i in range(h + 1))
    den = Den(h, EpsReal(r, sign), d, tuple(e))
    assume(validate(den) is None)
    return den


def some_nests(den, cap=40):
    return list(itertools.islice(iter_nests(den), cap))
