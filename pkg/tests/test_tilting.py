from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qexact.closure import GEN, SUB, ck, gen_sub, gs
from qexact.combinatorics import Interval, parse_interval_set, parse_orientation
from qexact.exact import all_structures, make_structure
from qexact.tilting import (
    LEFT, Tilting, class_extrema, enumerate_tiltings, equivalence_classes, is_tilting,
    minimal_approximation, mutate, mutations, tilting_poset)
from strategies import orientations, orientations_upto

I = Interval.parse

# tilting modules of 1 -> 2 <- 3 -> 4, lettered as in the usual drawing of the poset
RLR_TILTINGS = {
    "a": "2,1..2,2..4,4", "b": "1..2,2..4,4,1..4", "c": "2,1..2,2..4,2..3",
    "d": "1..2,2..4,1..4,2..3", "e": "2..4,4,1..4,3..4", "f": "1..2,4,1..4,1",
    "g": "1..2,1..4,2..3,1..3", "h": "2..4,1..4,2..3,3..4", "i": "4,1..4,3..4,1",
    "j": "1..2,1..4,1..3,1", "k": "1..4,2..3,3..4,1..3", "l": "1..4,3..4,1..3,1",
    "m": "2..3,3..4,1..3,3", "n": "3..4,1..3,3,1",
}
RLR_EDGES = "ab ac bd be bf cd dg dh eh ei fi fj gk gj hk il jl kl km ln mn"
RLR_DIAMOND_CLASSES = ["ab", "cdg", "e", "f", "hkm", "i", "j", "ln"]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def _t(text):
    return Tilting.of(parse_interval_set(text))


@pytest.fixture
def rlr():
    return parse_orientation("RLR")


@pytest.mark.parametrize("Q", orientations_upto(5), ids=str)
def test_tilting_count_is_catalan(Q):
    ts = enumerate_tiltings(Q)
    assert len(ts) == catalan(Q.n)
    assert all(is_tilting(T, Q) for T in ts)


def test_rlr_tiltings_match_drawing(rlr):
    assert {_t(s) for s in RLR_TILTINGS.values()} == set(enumerate_tiltings(rlr))


def test_rlr_poset_matches_drawing(rlr):
    P = tilting_poset(make_structure(rlr, "max"))
    idx = {k: P.index(_t(v)) for k, v in RLR_TILTINGS.items()}
    want = {tuple(sorted((idx[a], idx[b]))) for a, b in RLR_EDGES.split()}
    got = {tuple(sorted(c)) for c in P.covers}
    assert got == want
    assert P.bottom() == idx["a"] and P.top() == idx["n"]


def test_rlr_diamond_classes(rlr):
    classes = equivalence_classes(make_structure(rlr, "diamond"))
    want = {frozenset(_t(RLR_TILTINGS[c]) for c in grp) for grp in RLR_DIAMOND_CLASSES}
    assert set(classes) == want


def test_projective_tilting_mutation_on_rr(rr):
    T = _t("1..3,2..3,3..3")
    m = mutate(T, I("2..3"), make_structure(rr, "max"))
    # left approximation X_23 -> X_13 with cokernel X_1
    assert m is not None and m.direction == LEFT
    assert m.result == _t("1..3,3..3,1..1")
    assert mutate(T, I("3..3"), make_structure(rr, "diamond")) is None


def test_mutate_rejects_foreign_summand(rr):
    with pytest.raises(ValueError):
        mutate(_t("1..3,2..3,3..3"), I("1..1"), make_structure(rr, "max"))


def test_minimal_approximation_drops_factoring_summands(rr):
    ap = minimal_approximation(I("3..3"), parse_interval_set("2..3,1..3"), LEFT, rr)
    # X_3 -> X_13 factors through X_23
    assert ap.parts == (I("2..3"),)
    with pytest.raises(ValueError):
        minimal_approximation(I("3..3"), [], "up", rr)


@given(st.data())
def test_mutation_is_an_involution(data):
    Q = data.draw(orientations(max_n=5))
    E = make_structure(Q, data.draw(st.sampled_from(["max", "diamond"])))
    T = data.draw(st.sampled_from(enumerate_tiltings(Q)))
    for m in mutations(T, E):
        back = mutate(m.result, m.approximation.other_end[0], E)
        assert back is not None and back.result == T
        assert back.direction != m.direction


@given(orientations(max_n=5))
def test_max_structure_mutates_at_sincere_complements(Q):
    # an almost complete tilting module has a second complement exactly when
    # it is sincere
    E = make_structure(Q, "max")
    for T in enumerate_tiltings(Q):
        sincere = [U for U in T
                   if set().union(*(K.vertices() for K in T if K != U)) == set(range(1, Q.n + 1))]
        assert sorted(m.at for m in mutations(T, E)) == sorted(sincere)


@pytest.mark.parametrize("Q", orientations_upto(4), ids=str)
def test_gs_of_tilting_is_union_of_class(Q):
    for E in all_structures(Q):
        for cls in equivalence_classes(E):
            union = frozenset().union(*(T.as_set() for T in cls))
            ex = class_extrema(cls, E)
            assert gen_sub(ex.minimum.as_set(), E, GEN) == union
            assert gen_sub(ex.maximum.as_set(), E, SUB) == union
            for T in cls:
                tr = gs(T.as_set(), E)
                assert tr.fixpoint == union and tr.depth <= 2
                assert ck(T.as_set(), E).fixpoint == union


@given(orientations(max_n=5))
def test_class_count(Q):
    assert len(equivalence_classes(make_structure(Q, "diamond"))) == 2 ** (Q.n - 1)
    assert len(equivalence_classes(make_structure(Q, "min"))) == len(enumerate_tiltings(Q))
    assert len(equivalence_classes(make_structure(Q, "max"))) == 1
