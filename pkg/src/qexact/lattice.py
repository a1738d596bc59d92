"""Lattice operations on a finite poset, congruences and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .tilting import Tilting, TiltingPoset


class NotALattice(ValueError):
    pass


def _least(cands: list[int], leq) -> int:
    for c in cands:
        if all(leq[c][d] for d in cands):
            return c
    raise NotALattice("no least element")


def _greatest(cands: list[int], leq) -> int:
    for c in cands:
        if all(leq[d][c] for d in cands):
            return c
    raise NotALattice("no greatest element")


def join_table(leq: Sequence[Sequence[bool]]) -> list[list[int]]:
    n = len(leq)
    return [[_least([c for c in range(n) if leq[a][c] and leq[b][c]], leq)
             for b in range(n)] for a in range(n)]


def meet_table(leq: Sequence[Sequence[bool]]) -> list[list[int]]:
    n = len(leq)
    return [[_greatest([c for c in range(n) if leq[c][a] and leq[c][b]], leq)
             for b in range(n)] for a in range(n)]


@dataclass(frozen=True)
class CongruenceResult:
    ok: bool
    counterexample: tuple[int, int, int, str] | None = None  # (a, x, b, "join"/"meet")


def congruence_check(P: TiltingPoset, classes: Iterable[Iterable[Tilting]]) -> CongruenceResult:
    """Is the partition compatible with meet and join?

    With a ~ x it is enough to test a v b ~ x v b and a ^ b ~ x ^ b for all b,
    the two-variable condition then follows by transitivity.
    """
    label = _labels(P, classes)
    join, meet = join_table(P.leq), meet_table(P.leq)
    n = len(P.elements)
    for a in range(n):
        for x in range(n):
            if a == x or label[a] != label[x]:
                continue
            for b in range(n):
                if label[join[a][b]] != label[join[x][b]]:
                    return CongruenceResult(False, (a, x, b, "join"))
                if label[meet[a][b]] != label[meet[x][b]]:
                    return CongruenceResult(False, (a, x, b, "meet"))
    return CongruenceResult(True)


def _labels(P: TiltingPoset, classes) -> list[int]:
    label = [-1] * len(P.elements)
    for k, cls in enumerate(classes):
        for T in cls:
            i = P.index(T)
            if label[i] != -1:
                raise ValueError("classes overlap")
            label[i] = k
    if -1 in label:
        raise ValueError("classes do not cover the poset")
    return label


def quotient_order(P: TiltingPoset, classes) -> list[list[bool]]:
    """[A] <= [B] iff a <= b for some a in A, b in B (then closed transitively)."""
    classes = list(classes)
    label = _labels(P, classes)
    m = len(classes)
    leq = [[i == j for j in range(m)] for i in range(m)]
    n = len(P.elements)
    for a in range(n):
        for b in range(n):
            if P.leq[a][b]:
                leq[label[a]][label[b]] = True
    for k in range(m):
        for i in range(m):
            if leq[i][k]:
                for j in range(m):
                    if leq[k][j]:
                        leq[i][j] = True
    for i in range(m):
        for j in range(m):
            if i != j and leq[i][j] and leq[j][i]:
                raise AssertionError("quotient order is not antisymmetric")
    return leq


def boolean_isomorphism(leq: Sequence[Sequence[bool]]) -> list[int] | None:
    """Order isomorphism onto the subsets of {0..k-1} (as bitmasks), or None."""
    m = len(leq)
    k = m.bit_length() - 1
    if m == 0 or 1 << k != m:
        return None
    down = [sum(leq[j][i] for j in range(m)) for i in range(m)]
    rank = []
    for d in down:
        r = d.bit_length() - 1
        if 1 << r != d:
            return None
        rank.append(r)
    order = sorted(range(m), key=lambda i: (rank[i], i))
    assign = [-1] * m
    used = set()

    def bt(pos: int) -> bool:
        if pos == m:
            return True
        x = order[pos]
        for mask in range(m):
            if mask in used or bin(mask).count("1") != rank[x]:
                continue
            ok = True
            for y in order[:pos]:
                my = assign[y]
                if leq[y][x] != (my & mask == my) or leq[x][y] != (mask & my == mask):
                    ok = False
                    break
            if ok:
                assign[x] = mask
                used.add(mask)
                if bt(pos + 1):
                    return True
                used.discard(mask)
                assign[x] = -1
        return False

    return assign if bt(0) else None


@dataclass(frozen=True)
class QuotientReport:
    size: int
    boolean: bool
    rank: int | None


def quotient_boolean_check(P: TiltingPoset, classes) -> QuotientReport:
    leq = quotient_order(P, classes)
    iso = boolean_isomorphism(leq)
    k = len(leq).bit_length() - 1
    return QuotientReport(len(leq), iso is not None, k if iso is not None else None)
