"""Tilting modules, E-mutation, reachability classes and the tilting poset."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .combinatorics import Interval, Orientation, all_intervals, ext_dim, format_intervals, hom
from .exact import ExactStructure
from . import closure
from . import oracle as O

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True, order=True)
class Tilting:
    parts: tuple[Interval, ...]

    @classmethod
    def of(cls, parts: Iterable[Interval]) -> "Tilting":
        return cls(tuple(sorted(set(parts))))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __contains__(self, K):
        return K in self.parts

    def as_set(self) -> frozenset[Interval]:
        return frozenset(self.parts)

    def label(self) -> str:
        return ",".join(str(K) for K in self.parts)

    def replace(self, old: Interval, new: Interval) -> "Tilting":
        return Tilting.of([K for K in self.parts if K != old] + [new])


def rigid_pair(K: Interval, L: Interval, Q: Orientation) -> bool:
    return ext_dim(K, L, Q) == 0 and ext_dim(L, K, Q) == 0


def is_tilting(C: Iterable[Interval], Q: Orientation) -> bool:
    C = sorted(set(C))
    if len(C) != Q.n:
        return False
    return all(rigid_pair(K, L, Q) for K in C for L in C)


@lru_cache(maxsize=None)
def enumerate_tiltings(Q: Orientation) -> tuple[Tilting, ...]:
    """All tilting modules, by backtracking over the compatibility graph.

    Maximal rigid sets of intervals all have exactly n elements, which the
    search asserts.
    """
    ivs = all_intervals(Q.n)
    compat = {K: frozenset(L for L in ivs if L != K and rigid_pair(K, L, Q))
              for K in ivs if ext_dim(K, K, Q) == 0}
    order = {K: i for i, K in enumerate(ivs)}
    out: list[Tilting] = []

    def extend(chosen: list[Interval], cand: frozenset[Interval]):
        if not cand:
            # maximal clique
            if len(chosen) != Q.n:
                # not maximal if some earlier interval could still be added
                if not any(all(L in compat[K] for L in chosen) for K in ivs if K not in chosen):
                    raise AssertionError(f"maximal rigid set of size {len(chosen)}")
                return
            out.append(Tilting.of(chosen))
            return
        for K in sorted(cand, key=order.__getitem__):
            extend(chosen + [K], frozenset(L for L in cand & compat[K] if order[L] > order[K]))

    extend([], frozenset(compat))
    result = tuple(sorted(t for t in out if is_tilting(t, Q)))
    return result


# -- approximations and mutation -------------------------------------------------

@dataclass(frozen=True)
class Approximation:
    side: str                      # "left": U -> C, "right": C -> U
    at: Interval
    parts: tuple[Interval, ...]    # the summands of C
    exact: bool                    # mono (left) or epi (right)
    other_end: tuple[Interval, ...]  # cokernel (left) or kernel (right); () unless exact
    nonsplit: tuple[tuple[Interval, Interval], ...]

    def admissible(self, E: ExactStructure) -> bool:
        return self.exact and all(E.admits(q, s) for q, s in self.nonsplit)


def _factors(x: Interval, y: Interval, U: Interval, Q: Orientation, side: str) -> bool:
    """Does the basis map U -> x (left) / x -> U (right) factor through y?"""
    if side == LEFT:
        a, b = O.canonical_morphism(U, y, Q), O.canonical_morphism(y, x, Q)
        if a is None or b is None:
            return False
        return not O.compose(b, a).is_zero()
    a, b = O.canonical_morphism(x, y, Q), O.canonical_morphism(y, U, Q)
    if a is None or b is None:
        return False
    return not O.compose(b, a).is_zero()


def _minimise(U: Interval, members: list[Interval], Q: Orientation, side: str) -> tuple[Interval, ...]:
    cur = list(members)
    changed = True
    while changed:
        changed = False
        for x in cur:
            if any(_factors(x, y, U, Q, side) for y in cur if y != x):
                cur.remove(x)
                changed = True
                break
    return tuple(sorted(cur))


@lru_cache(maxsize=None)
def _approximation(U: Interval, M: frozenset[Interval], Q: Orientation, side: str) -> Approximation | None:
    if side == LEFT:
        members = sorted(K for K in M if hom(U, K, Q) is not None)
    else:
        members = sorted(K for K in M if hom(K, U, Q) is not None)
    if not members:
        return None
    parts = _minimise(U, members, Q, side)
    if _minimise(U, list(reversed(members)), Q, side) != parts:
        raise AssertionError("minimal approximation depends on the order")
    if side == LEFT:
        f = O.mono_into(U, parts, Q)
        if f is None:
            return Approximation(side, U, parts, False, (), ())
        s = O.ses_from_mono(f)
        return Approximation(side, U, parts, True, s.quot_parts, O.nonsplit_pairs(s))
    g = O.epi_onto(parts, U, Q)
    if g is None:
        return Approximation(side, U, parts, False, (), ())
    s = O.ses_from_epi(g)
    return Approximation(side, U, parts, True, s.sub_parts, O.nonsplit_pairs(s))


def minimal_approximation(U: Interval, M: Iterable[Interval], side: str,
                          Q: Orientation) -> Approximation | None:
    """Minimal left (U -> add M) or right (add M -> U) approximation.

    None when there is no non-zero morphism at all.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return _approximation(U, frozenset(M) - {U}, Q, side)


@dataclass(frozen=True)
class MutationStep:
    source: Tilting
    at: Interval
    direction: str
    result: Tilting
    approximation: Approximation


@lru_cache(maxsize=None)
def mutate(T: Tilting, U: Interval, E: ExactStructure) -> MutationStep | None:
    """E-mutation of T at the summand U, or None when neither side exists."""
    Q = E.quiver
    if U not in T:
        raise ValueError(f"{U} is not a summand of {T.label()}")
    rest = T.as_set() - {U}
    found = []
    for side in (LEFT, RIGHT):
        ap = _approximation(U, rest, Q, side)
        if ap is not None and ap.admissible(E):
            found.append(ap)
    if len(found) > 1:
        raise AssertionError(f"both mutations exist at {U} in {T.label()}")
    if not found:
        return None
    ap = found[0]
    if len(ap.other_end) != 1:
        raise AssertionError(f"exchange term {ap.other_end} is not indecomposable")
    new = T.replace(U, ap.other_end[0])
    if not is_tilting(new, Q):
        raise AssertionError(f"mutation of {T.label()} at {U} is not tilting")
    return MutationStep(T, U, ap.side, new, ap)


def mutations(T: Tilting, E: ExactStructure) -> list[MutationStep]:
    return [m for U in T if (m := mutate(T, U, E)) is not None]


def reachability_class(T: Tilting, E: ExactStructure) -> frozenset[Tilting]:
    seen = {T}
    todo = deque([T])
    while todo:
        cur = todo.popleft()
        for m in mutations(cur, E):
            if m.result not in seen:
                seen.add(m.result)
                todo.append(m.result)
    return frozenset(seen)


@lru_cache(maxsize=None)
def equivalence_classes(E: ExactStructure) -> tuple[frozenset[Tilting], ...]:
    """Partition of all tilting modules into reachability classes."""
    remaining = list(enumerate_tiltings(E.quiver))
    out = []
    done: set[Tilting] = set()
    for T in remaining:
        if T in done:
            continue
        cls = reachability_class(T, E)
        done |= cls
        out.append(cls)
    return tuple(out)


# -- the poset -----------------------------------------------------------------

@dataclass(frozen=True)
class TiltingPoset:
    elements: tuple[Tilting, ...]
    covers: tuple[tuple[int, int], ...]   # (lower, upper) index pairs
    leq: tuple[tuple[bool, ...], ...]

    def index(self, T: Tilting) -> int:
        return self.elements.index(T)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def bottom(self) -> int:
        cands = [i for i in range(len(self.elements)) if all(self.leq[i])]
        return cands[0] if len(cands) == 1 else -1

    def top(self) -> int:
        cands = [j for j in range(len(self.elements))
                 if all(self.leq[i][j] for i in range(len(self.elements)))]
        return cands[0] if len(cands) == 1 else -1


def _closure(n: int, edges: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in edges:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise AssertionError("mutation order has a cycle")
    return leq


@lru_cache(maxsize=None)
def tilting_poset(E: ExactStructure) -> TiltingPoset:
    """T' <= T when T' is reached from T by right E-mutations."""
    elems = enumerate_tiltings(E.quiver)
    idx = {T: i for i, T in enumerate(elems)}
    edges = set()
    for T in elems:
        for m in mutations(T, E):
            if m.direction == RIGHT:
                edges.add((idx[m.result], idx[T]))
            else:
                edges.add((idx[T], idx[m.result]))
    leq = _closure(len(elems), edges)
    # transitive reduction
    covers = []
    for a, b in sorted(edges):
        if not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in range(len(elems))):
            covers.append((a, b))
    return TiltingPoset(elems, tuple(covers), tuple(tuple(r) for r in leq))


@dataclass(frozen=True)
class ClassExtrema:
    minimum: Tilting
    maximum: Tilting


def class_extrema(cls: Iterable[Tilting], E: ExactStructure) -> ClassExtrema:
    """Unique minimum and maximum of a reachability class under <=_E.

    Also asserts GS(T) = Gen_E(min) and GS(T) = Sub_E(max) on the class.
    """
    cls = list(cls)
    P = tilting_poset(E)
    ids = [P.index(T) for T in cls]
    mins = [i for i in ids if not any(j != i and P.le(j, i) for j in ids)]
    maxs = [i for i in ids if not any(j != i and P.le(i, j) for j in ids)]
    if len(mins) != 1 or len(maxs) != 1:
        raise AssertionError(f"class has {len(mins)} minima and {len(maxs)} maxima")
    lo, hi = P.elements[mins[0]], P.elements[maxs[0]]
    g = closure.gs(lo.as_set(), E).fixpoint
    if closure.gen_sub(lo.as_set(), E, closure.GEN) != g:
        raise AssertionError(f"GS differs from Gen of the class minimum {lo.label()}")
    if closure.gen_sub(hi.as_set(), E, closure.SUB) != g:
        raise AssertionError(f"GS differs from Sub of the class maximum {hi.label()}")
    return ClassExtrema(lo, hi)


def tilting_json(T: Tilting) -> list[str]:
    return format_intervals(T.parts)
