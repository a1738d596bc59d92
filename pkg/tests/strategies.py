"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from qexact.combinatorics import Interval, Orientation, all_orientations


@st.composite
def orientations(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return Orientation("".join(draw(st.lists(st.sampled_from("RL"), min_size=n - 1, max_size=n - 1))))


@st.composite
def intervals(draw, n):
    b = draw(st.integers(1, n))
    e = draw(st.integers(b, n))
    return Interval(b, e)


@st.composite
def quiver_and_set(draw, min_n=1, max_n=5, max_size=4):
    Q = draw(orientations(min_n, max_n))
    C = draw(st.frozensets(intervals(Q.n), max_size=max_size))
    return Q, C


def orientations_upto(n_max):
    """Every orientation with 1 <= n <= n_max, for exhaustive parametrization."""
    return [Q for n in range(1, n_max + 1) for Q in all_orientations(n)]
