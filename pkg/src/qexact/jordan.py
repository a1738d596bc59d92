"""Generic Jordan types of nilpotent endomorphisms and CJR subcategories.

A representation M of a type A quiver has a nilpotent endomorphism algebra
part NEnd(M); its generic element has, at each vertex, a Jordan type that
is maximal in dominance order.  We estimate it by sampling over a large
prime field.  The jr_probe looks for pairs of non-isomorphic objects with
the same generic Jordan type.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import (
    DomainError, Interval, Orientation, ParseError, adjacent, all_intervals, side_relation)
from .exact import make_structure
from . import closure
from . import linalg as la
from . import oracle as O
from .tilting import is_tilting

MIN_PRIME = 97


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; ``()`` is the zero partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts if x != 0)
        if any(x < 0 for x in parts) or list(parts) != sorted(parts, reverse=True):
            raise DomainError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition{tuple(self)}"


PartitionTuple = tuple  # tuple[Partition, ...], one per vertex


def _dominated(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def partition_leq(lam: Partition, mu: Partition) -> bool:
    if sum(lam) != sum(mu):
        raise DomainError(f"partitions of different sizes: {lam}, {mu}")
    return _dominated(lam, mu)


def tuple_leq(x: Sequence[Partition], y: Sequence[Partition]) -> bool:
    if len(x) != len(y):
        raise DomainError("partition tuples of different lengths")
    return all(partition_leq(a, b) for a, b in zip(x, y))


def dominance_leq(x, y) -> bool | None:
    """True if x <= y, False if y < x, None when incomparable.

    Accepts single partitions or tuples of partitions (componentwise order).
    """
    single = not x or not isinstance(x[0], (tuple, list))
    if single:
        x, y = (Partition(x),), (Partition(y),)
    if tuple_leq(x, y):
        return True
    if tuple_leq(y, x):
        return False
    return None


# -- sampling ------------------------------------------------------------------

@dataclass(frozen=True)
class NilpotentSample:
    parts: tuple[Interval, ...]
    jordan_type: tuple[Partition, ...]
    blocks: tuple[np.ndarray, ...]   # the sampled element, vertex by vertex, over F_p


class Inconclusive(RuntimeError):
    def __init__(self, maxima):
        super().__init__(f"incomparable maximal Jordan types: {maxima}")
        self.maxima = maxima


@lru_cache(maxsize=None)
def _interval_hom(K: Interval, L: Interval, Q: Orientation) -> tuple[tuple, ...]:
    """Hom basis between interval modules as per-vertex scalars (or empty)."""
    basis = O.hom_basis(O.interval_rep(K, Q), O.interval_rep(L, Q))
    out = []
    for f in basis:
        out.append(tuple(f.blocks[q][0, 0] if f.blocks[q].size else 0 for q in range(Q.n)))
    return tuple(out)


def _generators(parts: tuple[Interval, ...], Q: Orientation):
    """Spanning set of the nilpotent subspace used for sampling:
    radical maps between distinct summand types plus strictly triangular
    maps between copies of the same interval."""
    gens = []
    for i, Ki in enumerate(parts):
        for j, Kj in enumerate(parts):
            if Ki == Kj and not i < j:
                continue
            for vals in _interval_hom(Ki, Kj, Q):
                gens.append((i, j, vals))
    return gens


def _jordan_type(N: np.ndarray, p: int) -> Partition:
    d = N.shape[0]
    if d == 0:
        return Partition()
    ranks = [d]
    P = np.identity(d, dtype=np.int64)
    for _ in range(d):
        P = (P @ N) % p
        ranks.append(la.rank_mod_p(P, p))
    if ranks[-1] != 0:
        raise AssertionError("sampled endomorphism is not nilpotent")
    ge = [ranks[k - 1] - ranks[k] for k in range(1, d + 1)]  # blocks of size >= k
    parts = []
    for k in range(d, 0, -1):
        exact = ge[k - 1] - (ge[k] if k < d else 0)
        parts.extend([k] * exact)
    return Partition(parts)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed % 2**64, trial]))


def sample_generic_nilpotent(M: O.MatrixRep | Sequence[Interval], p: int = 32003,
                             trials: int = 64, seed: int = 0,
                             Q: Orientation | None = None) -> list[NilpotentSample]:
    """Random nilpotent endomorphisms of M over F_p, one per trial."""
    if p < MIN_PRIME:
        raise DomainError(f"prime {p} is too small (need >= {MIN_PRIME})")
    if trials < 1:
        raise DomainError("need at least one trial")
    if isinstance(M, O.MatrixRep):
        Q = M.quiver
        parts = O.decompose(M)
    else:
        parts = tuple(sorted(M))
        if Q is None:
            raise ValueError("quiver needed when M is given as intervals")
    coords = O._coords(parts, Q.n)
    dims = [len(c) for c in coords]
    gens = _generators(parts, Q)
    gens_p = [(i, j, [la.to_mod_p(v, p) for v in vals]) for i, j, vals in gens]
    out = []
    for t in range(trials):
        rng = _trial_rng(seed, t)
        coeffs = rng.integers(0, p, size=len(gens_p))
        blocks = [np.zeros((d, d), dtype=np.int64) for d in dims]
        for c, (i, j, vals) in zip(coeffs, gens_p):
            if not c:
                continue
            for q in range(Q.n):
                if vals[q] and i in coords[q] and j in coords[q]:
                    blocks[q][coords[q][j], coords[q][i]] = (
                        blocks[q][coords[q][j], coords[q][i]] + int(c) * vals[q]) % p
        jt = tuple(_jordan_type(b, p) for b in blocks)
        out.append(NilpotentSample(parts, jt, tuple(blocks)))
    return out


def genjf_estimate(M, p: int = 32003, trials: int = 64, seed: int = 0,
                   Q: Orientation | None = None) -> tuple[Partition, ...]:
    """Dominance-maximal Jordan type among the samples.

    Raises ``Inconclusive`` if the maximal observed types are incomparable.
    """
    samples = sample_generic_nilpotent(M, p, trials, seed, Q)
    seen = sorted({s.jordan_type for s in samples})
    maxima = [x for x in seen if not any(y != x and tuple_leq(x, y) for y in seen)]
    if len(maxima) != 1:
        raise Inconclusive(maxima)
    return maxima[0]


# -- CJR ------------------------------------------------------------------------

def is_adjacency_avoiding(C: Iterable[Interval]) -> bool:
    C = list(C)
    return not any(adjacent(K, L) for K, L in combinations(C, 2))


def is_cjr(C: Iterable[Interval], Q: Orientation) -> bool:
    """Adjacency-avoiding, equivalently adapted to the diamond structure."""
    C = frozenset(C)
    a = is_adjacency_avoiding(C)
    b = closure.is_e_adapted(C, make_structure(Q, "diamond"))[0]
    if a != b:
        raise AssertionError(f"CJR characterisations disagree on {sorted(C)}")
    return a


@dataclass(frozen=True)
class CjrPair:
    B: frozenset[int]
    E: frozenset[int]

    @classmethod
    def parse(cls, text: str) -> "CjrPair":
        """``"B=1,2,3,5;E=3,5,6,7"``"""
        fields = {}
        for chunk in text.split(";"):
            if "=" not in chunk:
                raise ParseError(f"bad pair {text!r}")
            k, v = chunk.split("=", 1)
            try:
                fields[k.strip()] = frozenset(int(x) for x in v.split(",") if x.strip())
            except ValueError as exc:
                raise ParseError(f"bad pair {text!r}") from exc
        if set(fields) != {"B", "E"}:
            raise ParseError(f"pair needs B= and E=: {text!r}")
        return cls(fields["B"], fields["E"])

    def __str__(self):
        return "B={};E={}".format(",".join(map(str, sorted(self.B))),
                                  ",".join(map(str, sorted(self.E))))

    def is_maximal(self, n: int) -> bool:
        shifted = {e + 1 for e in self.E}
        return (not self.B & shifted and self.B | shifted == set(range(1, n + 2))
                and all(1 <= x <= n for x in self.B | self.E))


def maximal_cjr_pairs(n: int) -> list[CjrPair]:
    """The 2^(n-1) pairs (B, E) with B and E+1 partitioning {1, ..., n+1}."""
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    for mask in range(2 ** (n - 1)):
        B = {1} | {j for j in range(2, n + 1) if mask >> (j - 2) & 1}
        E = {j - 1 for j in range(2, n + 2) if j not in B}
        out.append(CjrPair(frozenset(B), frozenset(E)))
    return out


def j_of(pair: CjrPair, n: int) -> frozenset[Interval]:
    return frozenset(Interval(b, e) for b in pair.B for e in pair.E if b <= e <= n)


def t_of(pair: CjrPair, Q: Orientation) -> frozenset[Interval]:
    """The tilting module inside J(B, E) whose GS closure recovers J(B, E)."""
    n = Q.n
    full = Interval(1, n)
    out = {Interval(1, e) for e in pair.E}
    for b in sorted(pair.B - {1}):
        chosen = None
        for e in sorted(x for x in pair.E if x >= b):
            rel = side_relation(Interval(b, e), full, Q)
            if not rel.above and not rel.below:
                chosen = Interval(b, e)
                break
        out.add(chosen if chosen is not None else Interval(b, n))
    return frozenset(out)


def pair_constructions(pair: CjrPair, Q: Orientation) -> tuple[frozenset[Interval], frozenset[Interval]]:
    if not pair.is_maximal(Q.n):
        raise DomainError(f"{pair} is not a maximal pair for n = {Q.n}")
    J, T = j_of(pair, Q.n), t_of(pair, Q)
    if not T <= J or not is_tilting(T, Q):
        raise AssertionError(f"construction for {pair} is not a tilting inside J")
    return J, T


# -- probing ------------------------------------------------------------------

def _bounded_multisets(C: Sequence[Interval], n: int, d: int):
    """Non-empty multisets from C whose dimension vector is bounded by d."""
    C = sorted(C)

    def rec(i, dims, chosen):
        if i == len(C):
            if chosen:
                yield tuple(chosen)
            return
        K = C[i]
        m = 0
        while all(dims[v - 1] + m <= d for v in K.vertices()):
            new = list(dims)
            for v in K.vertices():
                new[v - 1] += m
            yield from rec(i + 1, new, chosen + [K] * m)
            m += 1

    yield from rec(0, [0] * n, [])


def _object_seed(seed: int, parts: Sequence[Interval]) -> int:
    key = f"{seed}|" + ",".join(str(K) for K in parts)
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")


@dataclass
class ProbeReport:
    params: dict
    objects: list[tuple[tuple[Interval, ...], tuple[Partition, ...] | None]]
    collisions: list[tuple[int, int]]
    inconclusive: list[int]

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "objects": [{"parts": [str(K) for K in parts],
                         "genjf": None if jt is None else [list(x) for x in jt]}
                        for parts, jt in self.objects],
            "collisions": [list(c) for c in self.collisions],
            "inconclusive": list(self.inconclusive),
        }


def jr_probe(C: Iterable[Interval], Q: Orientation, d: int, p: int = 32003,
             trials: int = 64, seed: int = 0) -> ProbeReport:
    """Generic Jordan types of all objects of add C with dimension vector
    bounded by d, and the pairs of objects where they coincide."""
    if d < 1:
        raise DomainError("dimension bound must be positive")
    objs = list(_bounded_multisets(sorted(C), Q.n, d))
    results = []
    bad = []
    for k, parts in enumerate(objs):
        try:
            jt = genjf_estimate(parts, p, trials, _object_seed(seed, parts), Q)
        except Inconclusive:
            jt = None
            bad.append(k)
        results.append((parts, jt))
    collisions = []
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            if results[i][1] is not None and results[i][1] == results[j][1]:
                collisions.append((i, j))
    params = {"quiver": Q.dirs, "category": [str(K) for K in sorted(set(C))],
              "dmax": d, "prime": p, "trials": trials, "seed": seed}
    return ProbeReport(params, results, collisions, bad)
