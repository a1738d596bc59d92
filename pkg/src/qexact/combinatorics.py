"""Combinatorics of indecomposable representations of type A quivers.

An orientation of A_n is a word over ``{R, L}`` of length n - 1.  Letter i
(1-based) describes the arrow between vertices i and i + 1: ``R`` is
i -> i+1 and ``L`` is i <- i+1.  Indecomposables are the interval modules
X_K, K = [b, e] with 1 <= b <= e <= n, written ``b..e``.

Everything here is purely combinatorial.  ``qexact.oracle`` recomputes the
same numbers from explicit matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class ParseError(ValueError):
    """Malformed textual input (orientation, interval, pair...)."""


class DomainError(ValueError):
    """Well-formed input outside the domain of an operation."""


@dataclass(frozen=True)
class Orientation:
    dirs: str

    def __post_init__(self):
        for pos, ch in enumerate(self.dirs, start=1):
            if ch not in "RL":
                raise ParseError(
                    f"orientation {self.dirs!r}: bad letter {ch!r} at position {pos}")

    @property
    def n(self) -> int:
        return len(self.dirs) + 1

    def __str__(self):
        return self.dirs

    def points_right(self, i: int) -> bool:
        """True when the arrow between vertices i and i+1 is i -> i+1."""
        return self.dirs[i - 1] == "R"

    def arrows(self) -> list[tuple[int, int]]:
        """(source, target) pairs, 1-based, in arrow order."""
        return [(i, i + 1) if d == "R" else (i + 1, i)
                for i, d in enumerate(self.dirs, start=1)]

    def arrow_ends(self, i: int) -> tuple[int, int]:
        """0-based (source, target) of the 0-based arrow i."""
        return (i, i + 1) if self.dirs[i] == "R" else (i + 1, i)

    def reachable(self, q: int) -> "Interval":
        """Vertices reached from q along directed paths (support of P(q))."""
        b = e = q
        while e < self.n and self.points_right(e):
            e += 1
        while b > 1 and not self.points_right(b - 1):
            b -= 1
        return Interval(b, e)

    def coreachable(self, q: int) -> "Interval":
        """Vertices with a directed path to q (support of I(q))."""
        b = e = q
        while e < self.n and not self.points_right(e):
            e += 1
        while b > 1 and self.points_right(b - 1):
            b -= 1
        return Interval(b, e)


def parse_orientation(text: str) -> Orientation:
    """Parse an orientation word; the empty word is A_1."""
    return Orientation(text.strip())


def all_orientations(n: int) -> list[Orientation]:
    if n < 1:
        raise DomainError("n must be positive")
    words = [""]
    for _ in range(n - 1):
        words = [w + c for w in words for c in "RL"]
    return [Orientation(w) for w in sorted(words, key=lambda w: w.replace("R", "0"))]


_INTERVAL_RE = re.compile(r"^\s*(\d+)(?:\s*\.\.\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class Interval:
    b: int
    e: int

    def __post_init__(self):
        if not 1 <= self.b <= self.e:
            raise DomainError(f"not an interval: [{self.b}, {self.e}]")

    @classmethod
    def parse(cls, text: str) -> "Interval":
        m = _INTERVAL_RE.match(text)
        if not m:
            raise ParseError(f"bad interval {text!r}, expected 'b..e'")
        b = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else b
        if b > e or b < 1:
            raise ParseError(f"bad interval {text!r}: need 1 <= b <= e")
        return cls(b, e)

    def __str__(self):
        return f"{self.b}..{self.e}"

    def __repr__(self):
        return f"Interval({self.b}..{self.e})"

    def __contains__(self, q: int) -> bool:
        return self.b <= q <= self.e

    def __len__(self):
        return self.e - self.b + 1

    def vertices(self) -> range:
        return range(self.b, self.e + 1)

    def issubset(self, other: "Interval") -> bool:
        return other.b <= self.b and self.e <= other.e

    def meet(self, other: "Interval") -> "Interval | None":
        b, e = max(self.b, other.b), min(self.e, other.e)
        return Interval(b, e) if b <= e else None

    def span(self, other: "Interval") -> "Interval":
        return Interval(min(self.b, other.b), max(self.e, other.e))


def check_in_range(K: Interval, Q: Orientation) -> Interval:
    if K.e > Q.n:
        raise DomainError(f"interval {K} does not fit A_{Q.n}")
    return K


def parse_interval_set(text: str, Q: Orientation | None = None) -> frozenset[Interval]:
    """Parse ``"1..2, 3..3"``; a bare integer ``q`` means ``q..q``."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for chunk in text.split(","):
        K = Interval.parse(chunk)
        if Q is not None:
            check_in_range(K, Q)
        out.add(K)
    return frozenset(out)


def parse_interval_list(text: str, Q: Orientation | None = None) -> tuple[Interval, ...]:
    """Like ``parse_interval_set`` but keeps repetitions (a multiset), sorted."""
    text = text.strip()
    if not text:
        return ()
    out = [Interval.parse(chunk) for chunk in text.split(",")]
    if Q is not None:
        for K in out:
            check_in_range(K, Q)
    return tuple(sorted(out))


def format_intervals(C: Iterable[Interval]) -> list[str]:
    return [str(K) for K in sorted(C)]


def all_intervals(n: int) -> list[Interval]:
    return [Interval(b, e) for b in range(1, n + 1) for e in range(b, n + 1)]


def dim_vector(K: Interval, Q: Orientation) -> tuple[int, ...]:
    check_in_range(K, Q)
    return tuple(1 if q in K else 0 for q in range(1, Q.n + 1))


class SideRelation(NamedTuple):
    above: bool
    below: bool


def side_relation(K: Interval, L: Interval, Q: Orientation) -> SideRelation:
    """Whether K sits above / below L inside the region of L.

    K above L: X_K is a quotient of X_L.  K below L: X_K is a submodule.
    """
    if not K.issubset(L):
        raise DomainError(f"{K} is not contained in {L}")
    left_in = K.b == L.b
    right_in = K.e == L.e
    above = ((left_in or not Q.points_right(K.b - 1))
             and (right_in or Q.points_right(K.e)))
    below = ((left_in or Q.points_right(K.b - 1))
             and (right_in or not Q.points_right(K.e)))
    return SideRelation(above, below)


@lru_cache(maxsize=None)
def hom(K: Interval, L: Interval, Q: Orientation) -> Interval | None:
    """Support J of the basis morphism X_K -> X_L, or None if Hom is zero.

    J is the unique interval with J above K and J below L.
    """
    check_in_range(K, Q)
    check_in_range(L, Q)
    M = K.meet(L)
    if M is None:
        return None
    found = None
    for b in M.vertices():
        for e in range(b, M.e + 1):
            J = Interval(b, e)
            if side_relation(J, K, Q).above and side_relation(J, L, Q).below:
                if found is not None:
                    raise AssertionError(f"two witnesses for Hom({K}, {L})")
                found = J
    return found


def hom_dim(K: Interval, L: Interval, Q: Orientation) -> int:
    return 0 if hom(K, L, Q) is None else 1


def euler_form(a: Sequence[int], b: Sequence[int], Q: Orientation) -> int:
    if len(a) != Q.n or len(b) != Q.n:
        raise DomainError("dimension vectors must have length n")
    val = sum(x * y for x, y in zip(a, b))
    for s, t in Q.arrows():
        val -= a[s - 1] * b[t - 1]
    return val


@lru_cache(maxsize=None)
def ext_dim(quot: Interval, sub: Interval, Q: Orientation) -> int:
    """dim Ext^1(X_quot, X_sub), i.e. sequences 0 -> X_sub -> E -> X_quot -> 0."""
    d = hom_dim(quot, sub, Q) - euler_form(dim_vector(quot, Q), dim_vector(sub, Q), Q)
    if d not in (0, 1):
        raise AssertionError(f"ext dimension {d} for ({quot}, {sub}) on {Q}")
    return d


@dataclass(frozen=True)
class ExtShape:
    kind: str  # "gluing" or "diamond"
    quot: Interval
    sub: Interval
    middle: tuple[Interval, ...]


def classify_nonsplit(quot: Interval, sub: Interval, Q: Orientation) -> ExtShape:
    """Shape of the non-split sequence 0 -> X_sub -> E -> X_quot -> 0."""
    if ext_dim(quot, sub, Q) == 0:
        raise DomainError(f"Ext^1({quot}, {sub}) vanishes on {Q}")
    meet = quot.meet(sub)
    if meet is None:
        # disjoint ends glue into one interval
        return ExtShape("gluing", quot, sub, (quot.span(sub),))
    if not (quot.issubset(sub) or sub.issubset(quot)):
        middle = (meet, quot.span(sub))
    else:
        small, big = (quot, sub) if quot.issubset(sub) else (sub, quot)
        if not (big.b < small.b and small.e < big.e):
            raise AssertionError(f"unexpected nested extension ({quot}, {sub})")
        middle = (Interval(big.b, small.e), Interval(small.b, big.e))
    return ExtShape("diamond", quot, sub, tuple(sorted(middle)))


def adjacent(K: Interval, L: Interval) -> bool:
    return K.b == L.e + 1 or L.b == K.e + 1


def crossing(K: Interval, L: Interval) -> bool:
    return K.meet(L) is not None and not K.issubset(L) and not L.issubset(K)


def adjacency_and_crossing(K: Interval, L: Interval) -> tuple[bool, bool]:
    return adjacent(K, L), crossing(K, L)
