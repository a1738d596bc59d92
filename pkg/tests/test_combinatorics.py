import pytest
from hypothesis import given
from hypothesis import strategies as st

from qexact.combinatorics import (
    DomainError, Interval, ParseError, adjacency_and_crossing, all_intervals, classify_nonsplit,
    dim_vector, euler_form, ext_dim, hom, hom_dim, parse_interval_list, parse_interval_set,
    parse_orientation, side_relation)
from strategies import intervals, orientations

I = Interval.parse


def test_parse_orientation_rejects_bad_letter():
    with pytest.raises(ParseError, match="position 3"):
        parse_orientation("RLX")


def test_empty_word_is_a1():
    assert parse_orientation("").n == 1


@pytest.mark.parametrize("text", ["3..1", "0..2", "a..b", "1..", ""])
def test_bad_intervals(text):
    with pytest.raises(ParseError):
        Interval.parse(text)


def test_interval_set_parsing():
    assert parse_interval_set(" 1..2 , 3 ") == {I("1..2"), I("3..3")}
    assert parse_interval_list("1..2,1..1,1..2") == (I("1..1"), I("1..2"), I("1..2"))
    with pytest.raises(DomainError):
        parse_interval_set("1..4", parse_orientation("RR"))


def test_hom_on_r():
    Q = parse_orientation("R")
    # 1 -> 2: the simple at 2 is projective and sits inside X_12
    assert hom(I("2..2"), I("1..2"), Q) == I("2..2")
    assert hom(I("1..2"), I("1..1"), Q) == I("1..1")
    assert hom(I("1..1"), I("1..2"), Q) is None
    assert ext_dim(I("1..1"), I("2..2"), Q) == 1
    assert ext_dim(I("2..2"), I("1..1"), Q) == 0


def test_hom_on_rlr_sample():
    Q = parse_orientation("RLR")
    assert hom(I("2..3"), I("2..2"), Q) is None
    assert hom(I("2..2"), I("2..3"), Q) == I("2..2")


def test_classification_shapes():
    Q = parse_orientation("RLRRLR")
    sh = classify_nonsplit(I("1..1"), I("2..3"), Q)
    assert sh.kind == "gluing" and sh.middle == (I("1..3"),)
    Q = parse_orientation("RR")
    with pytest.raises(DomainError):
        classify_nonsplit(I("2..2"), I("1..1"), Q)


def test_adjacency_and_crossing():
    assert adjacency_and_crossing(I("1..2"), I("3..4")) == (True, False)
    assert adjacency_and_crossing(I("1..3"), I("2..4")) == (False, True)
    assert adjacency_and_crossing(I("1..4"), I("2..3")) == (False, False)


@given(st.data())
def test_hom_witness_is_above_and_below(data):
    Q = data.draw(orientations())
    K = data.draw(intervals(Q.n))
    L = data.draw(intervals(Q.n))
    J = hom(K, L, Q)
    if J is not None:
        assert side_relation(J, K, Q).above
        assert side_relation(J, L, Q).below


@given(st.data())
def test_ext_is_hom_minus_euler(data):
    Q = data.draw(orientations())
    K = data.draw(intervals(Q.n))
    L = data.draw(intervals(Q.n))
    e = ext_dim(K, L, Q)
    assert e in (0, 1)
    assert hom_dim(K, L, Q) - e == euler_form(dim_vector(K, Q), dim_vector(L, Q), Q)


@given(orientations())
def test_indecomposables_are_bricks_without_self_extensions(Q):
    for K in all_intervals(Q.n):
        assert hom(K, K, Q) == K
        assert ext_dim(K, K, Q) == 0


@given(st.data())
def test_hom_and_ext_between_same_pair_exclude_each_other(data):
    # Ext(L, K) = D Hom(K, tau L); with Hom(L, K) != 0 that would be a cycle
    # in the directed AR quiver
    Q = data.draw(orientations())
    K = data.draw(intervals(Q.n))
    L = data.draw(intervals(Q.n))
    assert not (hom_dim(L, K, Q) and ext_dim(L, K, Q))


@given(st.data())
def test_nonsplit_middle_dimension(data):
    Q = data.draw(orientations(min_n=2))
    K = data.draw(intervals(Q.n))
    L = data.draw(intervals(Q.n))
    if ext_dim(K, L, Q):
        sh = classify_nonsplit(K, L, Q)
        total = [sum(x) for x in zip(*(dim_vector(M, Q) for M in sh.middle))]
        assert total == [a + b for a, b in zip(dim_vector(K, Q), dim_vector(L, Q))]
