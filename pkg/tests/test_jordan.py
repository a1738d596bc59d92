import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qexact import oracle as O
from qexact.closure import gs
from qexact.combinatorics import (
    DomainError, Interval, ParseError, all_intervals, parse_interval_list, parse_orientation)
from qexact.exact import make_structure
from qexact.jordan import (
    CjrPair, Inconclusive, Partition, dominance_leq, genjf_estimate, is_adjacency_avoiding,
    is_cjr, j_of, jr_probe, maximal_cjr_pairs, pair_constructions, partition_leq,
    sample_generic_nilpotent)
from strategies import quiver_and_set

I = Interval.parse
P = Partition


def _genjf(word, text, **kw):
    Q = parse_orientation(word)
    return genjf_estimate(parse_interval_list(text), Q=Q, **kw)


def test_partition_validation():
    assert P((2, 1, 0)) == (2, 1)
    with pytest.raises(DomainError):
        P((1, 2))
    with pytest.raises(DomainError):
        partition_leq(P((2,)), P((1,)))


def test_dominance():
    assert dominance_leq((2, 2), (3, 1)) is True
    assert dominance_leq((3, 1), (2, 2)) is False
    assert dominance_leq((3, 1, 1, 1), (2, 2, 2)) is None
    assert dominance_leq((P((1, 1)), P((2,))), (P((2,)), P((2,)))) is True


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_dominance_extremes(xs):
    lam = P(sorted(xs, reverse=True))
    n = lam.size
    assert partition_leq(P([1] * n), lam)
    assert partition_leq(lam, P([n]))


def test_genjf_a2_values():
    assert _genjf("R", "1..2") == (P((1,)), P((1,)))
    assert _genjf("R", "1..1,1..2") == (P((2,)), P((1,)))
    assert _genjf("R", "2..2,1..2") == (P((1,)), P((2,)))


def test_genjf_repeated_summand():
    # two copies of a brick: the generic nilpotent element swaps them
    assert _genjf("R", "1..2,1..2") == (P((2,)), P((2,)))


def test_prime_and_trials_are_validated():
    with pytest.raises(DomainError):
        _genjf("R", "1..2", p=13)
    with pytest.raises(DomainError):
        _genjf("R", "1..2", trials=0)


def test_genjf_is_deterministic():
    assert _genjf("RL", "1..2,2..3,2..2", seed=7) == _genjf("RL", "1..2,2..3,2..2", seed=7)


@given(quiver_and_set(max_n=4, max_size=3), st.integers(0, 2 ** 32))
def test_samples_are_nilpotent_endomorphisms(qc, seed):
    Q, C = qc
    if not C:
        return
    parts = tuple(sorted(C)) + tuple(sorted(C))[:1]
    M = O.build_rep(parts, Q)
    p = 32003
    for smp in sample_generic_nilpotent(parts, p=p, trials=3, seed=seed, Q=Q):
        for i in range(Q.n - 1):
            s, t = Q.arrow_ends(i)
            A = np.array(M.maps[i], dtype=np.int64)
            lhs = (A @ smp.blocks[s]) % p
            rhs = (smp.blocks[t] @ A) % p
            assert (lhs == rhs).all()
        for q, jt in enumerate(smp.jordan_type):
            assert jt.size == M.dims[q]


def test_cjr_predicates():
    Q = parse_orientation("RR")
    assert is_adjacency_avoiding([I("1..1"), I("3..3")])
    assert not is_cjr([I("1..1"), I("2..2")], Q)
    assert is_cjr([I("1..2"), I("1..3"), I("2..2")], Q) == is_adjacency_avoiding(
        [I("1..2"), I("1..3"), I("2..2")])


@given(quiver_and_set(max_n=5, max_size=5))
def test_adjacency_avoiding_iff_diamond_adapted(qc):
    Q, C = qc
    is_cjr(C, Q)  # raises if the two characterisations disagree


def test_pair_parsing():
    pr = CjrPair.parse("B=1,2,3,5;E=3,5,6,7")
    assert str(pr) == "B=1,2,3,5;E=3,5,6,7" and pr.is_maximal(7)
    for bad in ("B=1", "B=1;E=x", "nonsense"):
        with pytest.raises(ParseError):
            CjrPair.parse(bad)


def test_pair_construction_on_a7():
    Q = parse_orientation("RLRRLR")
    pr = CjrPair.parse("B=1,2,3,5;E=3,5,6,7")
    J, T = pair_constructions(pr, Q)
    assert len(J) == 15
    assert gs(T, make_structure(Q, "diamond")).fixpoint == J


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_maximal_pairs(n):
    pairs = maximal_cjr_pairs(n)
    assert len(pairs) == 2 ** (n - 1) == len({str(p) for p in pairs})
    assert all(p.is_maximal(n) for p in pairs)
    assert all(is_adjacency_avoiding(j_of(p, n)) for p in pairs)


def test_pair_must_be_maximal():
    with pytest.raises(DomainError):
        pair_constructions(CjrPair.parse("B=1;E=1"), parse_orientation("RR"))


def test_probe_finds_forced_collisions():
    Q = parse_orientation("RR")
    rep = jr_probe(all_intervals(3), Q, 1)
    names = {tuple(map(str, rep.objects[i][0])): i for i in range(len(rep.objects))}
    family = [("1..3",), ("1..2", "3..3"), ("1..1", "2..3"), ("1..1", "2..2", "3..3")]
    ids = sorted(names[f] for f in family)
    for a in ids:
        for b in ids:
            if a < b:
                assert (a, b) in rep.collisions
    assert rep.inconclusive == []


def test_probe_maximal_cjr_is_collision_free():
    Q = parse_orientation("RLR")
    for pr in maximal_cjr_pairs(Q.n):
        J, _ = pair_constructions(pr, Q)
        rep = jr_probe(J, Q, 2, trials=16)
        assert rep.collisions == [] and rep.inconclusive == []


def test_inconclusive_carries_maxima():
    exc = Inconclusive([(P((1,)),), (P((2,)),)])
    assert len(exc.maxima) == 2
