"""Gen/Sub, the GS and CK iterations, and the subcategory predicates.

Subcategories are represented by the set of their indecomposables, a
``frozenset`` of ``Interval``.

An indecomposable X_Z lies in Gen_E(C) exactly when the sum of all basis
morphisms from members of C to X_Z is an admissible deflation: any
admissible deflation Y -> X_Z with Y in add C factors through that sum, and
a map through which an admissible deflation factors is itself one.  So one
sequence per target decides membership; ``gen_sub_bruteforce`` runs the
naive search over all sub-sums as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .combinatorics import (
    Interval, Orientation, all_intervals, classify_nonsplit, ext_dim, format_intervals, hom)
from .exact import ExactStructure
from . import oracle as O

GEN, SUB = "gen", "sub"


@dataclass(frozen=True)
class SequenceProfile:
    """What the closure code needs to know about one approximation sequence."""
    other_end: tuple[Interval, ...]                 # kernel (gen) or cokernel (sub)
    nonsplit: tuple[tuple[Interval, Interval], ...]  # (quot, sub) pairs

    def admissible(self, E: ExactStructure) -> bool:
        return all(E.admits(q, s) for q, s in self.nonsplit)


@lru_cache(maxsize=None)
def _covers(parts: tuple[Interval, ...], Z: Interval, Q: Orientation, side: str) -> bool:
    covered = set()
    for K in parts:
        J = hom(K, Z, Q) if side == GEN else hom(Z, K, Q)
        if J is not None:
            covered.update(J.vertices())
    return covered == set(Z.vertices())


@lru_cache(maxsize=None)
def sequence_profile(parts: tuple[Interval, ...], Z: Interval, Q: Orientation,
                     side: str) -> SequenceProfile | None:
    """Profile of ``sum(parts) -> X_Z`` (gen) or ``X_Z -> sum(parts)`` (sub).

    None when the map is not an epi (resp. mono).  The profile does not
    depend on the exact structure, so it is shared between structures.
    """
    if side == GEN:
        g = O.epi_onto(parts, Z, Q)
        if g is None:
            return None
        s = O.ses_from_epi(g)
        other = s.sub_parts
    else:
        f = O.mono_into(Z, parts, Q)
        if f is None:
            return None
        s = O.ses_from_mono(f)
        other = s.quot_parts
    return SequenceProfile(other, O.nonsplit_pairs(s))


def _hom_members(C: Iterable[Interval], Z: Interval, Q: Orientation, side: str) -> tuple[Interval, ...]:
    if side == GEN:
        return tuple(sorted(K for K in C if hom(K, Z, Q) is not None))
    return tuple(sorted(K for K in C if hom(Z, K, Q) is not None))


def in_gen_sub(C: frozenset[Interval], Z: Interval, E: ExactStructure, side: str) -> bool:
    if Z in C:
        return True
    Q = E.quiver
    parts = _hom_members(C, Z, Q, side)
    if not parts or not _covers(parts, Z, Q, side):
        return False
    if E.kind == "max":
        return True
    prof = sequence_profile(parts, Z, Q, side)
    return prof is not None and prof.admissible(E)


def gen_sub(C: Iterable[Interval], E: ExactStructure, side: str) -> frozenset[Interval]:
    """Indecomposables of Gen_E(C) (side "gen") or Sub_E(C) (side "sub")."""
    if side not in (GEN, SUB):
        raise ValueError(f"side must be 'gen' or 'sub', not {side!r}")
    C = frozenset(C)
    return frozenset(Z for Z in all_intervals(E.quiver.n) if in_gen_sub(C, Z, E, side))


def gen_sub_bruteforce(C: Iterable[Interval], E: ExactStructure, side: str,
                       max_dim: int | None = None) -> frozenset[Interval]:
    """Search every multiplicity-free sub-sum of C for an admissible deflation
    (or inflation).  Exponential; for tests."""
    C = frozenset(C)
    Q = E.quiver
    out = set(C)
    for Z in all_intervals(Q.n):
        if Z in C:
            continue
        members = _hom_members(C, Z, Q, side)
        found = False
        for r in range(1, len(members) + 1):
            for S in combinations(members, r):
                if max_dim is not None and sum(len(K) for K in S) > max_dim:
                    continue
                if side == GEN:
                    g = O.epi_onto(S, Z, Q)
                    s = None if g is None else O.ses_from_epi(g)
                else:
                    f = O.mono_into(Z, S, Q)
                    s = None if f is None else O.ses_from_mono(f)
                if s is not None and all(E.admits(q, k) for q, k in O.nonsplit_pairs(s)):
                    found = True
                    break
            if found:
                break
        if found:
            out.add(Z)
    return frozenset(out)


@dataclass(frozen=True)
class ClosureTrace:
    """Stages C = S_0 < S_1 < ... < S_k; S_k is the fixpoint (no repeats)."""
    operator: str
    structure: str
    stages: tuple[frozenset[Interval], ...]

    @property
    def fixpoint(self) -> frozenset[Interval]:
        return self.stages[-1]

    @property
    def depth(self) -> int:
        return len(self.stages) - 1

    def added(self, i: int) -> frozenset[Interval]:
        return self.stages[i] - self.stages[i - 1]

    def to_json(self) -> dict:
        return {"operator": self.operator, "structure": self.structure,
                "stages": [format_intervals(S) for S in self.stages]}


def _iterate(C, step, operator: str, E: ExactStructure) -> ClosureTrace:
    n = E.quiver.n
    cap = n * (n + 1) // 2
    stages = [frozenset(C)]
    for _ in range(cap + 1):
        nxt = step(stages[-1])
        if not stages[-1] <= nxt:
            raise AssertionError(f"{operator} stage shrank")
        if nxt == stages[-1]:
            return ClosureTrace(operator, E.name, tuple(stages))
        stages.append(nxt)
    raise AssertionError(f"{operator} did not stabilise within {cap} stages")


def gs(C: Iterable[Interval], E: ExactStructure) -> ClosureTrace:
    """Iterate C -> Gen_E(C) + Sub_E(C) to its fixpoint."""
    return _iterate(C, lambda S: gen_sub(S, E, GEN) | gen_sub(S, E, SUB), "gs", E)


# -- CK ---------------------------------------------------------------------

def _composite_nonzero(a: Interval, b: Interval, c: Interval, Q: Orientation) -> bool:
    """Is the composite of basis morphisms X_a -> X_b -> X_c non-zero?"""
    j1, j2 = hom(a, b, Q), hom(b, c, Q)
    return j1 is not None and j2 is not None and j1.meet(j2) is not None


def _minimal_sums(members: tuple[Interval, ...], Z: Interval, Q: Orientation, side: str):
    """Sub-sums of ``members`` that still cover X_Z and in which no summand's
    map factors through another one.  Other sub-sums differ from one of these
    by split summands only."""
    for r in range(1, len(members) + 1):
        for S in combinations(members, r):
            if not _covers(S, Z, Q, side):
                continue
            redundant = False
            for x in S:
                for y in S:
                    if x == y:
                        continue
                    if side == GEN and _composite_nonzero(x, y, Z, Q):
                        redundant = True
                    elif side == SUB and _composite_nonzero(Z, y, x, Q):
                        redundant = True
                    if redundant:
                        break
                if redundant:
                    break
            if not redundant:
                yield S


def coker_ker(C: Iterable[Interval], E: ExactStructure, side: str) -> frozenset[Interval]:
    """Indecomposables that are cokernels (side "gen") or kernels (side "sub")
    of admissible sequences with the other two terms in add C."""
    C = frozenset(C)
    Q = E.quiver
    out = set(C)
    for Z in all_intervals(Q.n):
        if Z in C:
            continue
        members = _hom_members(C, Z, Q, side)
        for S in _minimal_sums(members, Z, Q, side):
            prof = sequence_profile(S, Z, Q, side)
            if prof is None:
                continue
            if set(prof.other_end) <= C and prof.admissible(E):
                out.add(Z)
                break
    return frozenset(out)


def ck(C: Iterable[Interval], E: ExactStructure) -> ClosureTrace:
    return _iterate(C, lambda S: coker_ker(S, E, GEN) | coker_ker(S, E, SUB), "ck", E)


# -- predicates ---------------------------------------------------------------

def is_e_adapted(C: Iterable[Interval], E: ExactStructure) -> tuple[bool, tuple[Interval, Interval] | None]:
    """Every non-split class with both ends in C is admissible.

    Returns (verdict, witness) with witness = (quot, sub) of a bad class.
    """
    Q = E.quiver
    members = sorted(C)
    for K in members:
        for L in members:
            if ext_dim(K, L, Q) and not E.admits(K, L):
                return False, (K, L)
    return True, None


def extension_closure(C: Iterable[Interval], Q: Orientation) -> frozenset[Interval]:
    """Smallest superset closed under middle terms of non-split classes."""
    cur = set(C)
    changed = True
    while changed:
        changed = False
        for K in sorted(cur):
            for L in sorted(cur):
                if ext_dim(K, L, Q):
                    for M in classify_nonsplit(K, L, Q).middle:
                        if M not in cur:
                            cur.add(M)
                            changed = True
    return frozenset(cur)


def is_extension_closed(C: Iterable[Interval], Q: Orientation) -> bool:
    C = frozenset(C)
    return extension_closure(C, Q) == C


def is_e_serre(C: Iterable[Interval], E: ExactStructure) -> bool:
    """Closed under admissible quotients, admissible subobjects and
    admissible extensions."""
    C = frozenset(C)
    Q = E.quiver
    if gen_sub(C, E, GEN) != C or gen_sub(C, E, SUB) != C:
        return False
    for K in C:
        for L in C:
            if ext_dim(K, L, Q) and E.admits(K, L):
                if not set(classify_nonsplit(K, L, Q).middle) <= C:
                    return False
    return True


def is_maximal_adapted_extclosed(C: Iterable[Interval], E: ExactStructure) -> tuple[bool, Interval | None]:
    """For an E-adapted extension-closed C: is it maximal among such?

    When it is not, the returned interval Z is one whose addition (followed by
    extension closure) keeps C adapted.
    """
    C = frozenset(C)
    Q = E.quiver
    if not is_e_adapted(C, E)[0] or not is_extension_closed(C, Q):
        raise ValueError("C must be E-adapted and extension-closed")
    for Z in all_intervals(Q.n):
        if Z in C:
            continue
        if is_e_adapted(extension_closure(C | {Z}, Q), E)[0]:
            return False, Z
    return True, None
