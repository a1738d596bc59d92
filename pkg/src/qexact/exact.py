"""Exact structures on rep(Q) for type A.

Every Ext^1 between indecomposables is at most one dimensional, so an
exact structure is determined by which (quot, sub) pairs with non-vanishing
Ext^1 are admissible.  A sequence with decomposable end terms is admissible
when all of its non-split components are.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .combinatorics import (
    DomainError, Interval, Orientation, ParseError, all_intervals, classify_nonsplit,
    ext_dim, hom)
from . import oracle as O

BUILTIN = ("min", "max", "diamond")


@dataclass(frozen=True)
class ExactStructure:
    quiver: Orientation
    kind: str
    table: frozenset = field(default=frozenset())

    @property
    def name(self) -> str:
        return self.kind if self.kind != "custom" else "custom"

    def admits(self, quot: Interval, sub: Interval) -> bool:
        """Admissibility of a pair already known to have Ext^1 != 0."""
        if self.kind == "max":
            return True
        if self.kind == "min":
            return False
        if self.kind == "diamond":
            return classify_nonsplit(quot, sub, self.quiver).kind == "diamond"
        return (quot, sub) in self.table

    def admitted_pairs(self) -> list[tuple[Interval, Interval]]:
        ivs = all_intervals(self.quiver.n)
        return [(K, L) for K in ivs for L in ivs
                if ext_dim(K, L, self.quiver) and self.admits(K, L)]

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "custom":
            out["pairs"] = [{"quot": str(K), "sub": str(L)} for K, L in sorted(self.table)]
        return out


def make_structure(Q: Orientation, kind) -> ExactStructure:
    """``kind`` is "min", "max", "diamond" or an iterable of (quot, sub) pairs."""
    if isinstance(kind, str):
        if kind not in BUILTIN:
            raise ParseError(f"unknown structure {kind!r}")
        return ExactStructure(Q, kind)
    pairs = set()
    for quot, sub in kind:
        if ext_dim(quot, sub, Q) == 0:
            raise DomainError(f"Ext^1({quot}, {sub}) vanishes, pair cannot be admissible")
        pairs.add((quot, sub))
    return ExactStructure(Q, "custom", frozenset(pairs))


def load_structure_file(Q: Orientation, path: str | Path) -> ExactStructure:
    """Read ``[{"quot": "b..e", "sub": "b..e"}, ...]``."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a list of pairs")
    pairs = []
    for item in data:
        try:
            pairs.append((Interval.parse(item["quot"]), Interval.parse(item["sub"])))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{path}: bad entry {item!r}") from exc
    return make_structure(Q, pairs)


def parse_structure_arg(Q: Orientation, text: str) -> ExactStructure:
    if text.startswith("custom:"):
        return load_structure_file(Q, text[len("custom:"):])
    return make_structure(Q, text)


def admissible_class(E: ExactStructure, quot: Interval, sub: Interval) -> bool:
    if ext_dim(quot, sub, E.quiver) == 0:
        raise DomainError(f"Ext^1({quot}, {sub}) vanishes")
    return E.admits(quot, sub)


def admissible_ses(E: ExactStructure, s: O.SesWitness) -> bool:
    """Conflation test: every non-split component must be admissible."""
    return all(E.admits(q, k) for q, k in O.nonsplit_pairs(s))


def eproj_einj(E: ExactStructure) -> tuple[frozenset[Interval], frozenset[Interval]]:
    """E-projective and E-injective indecomposables."""
    Q = E.quiver
    ivs = all_intervals(Q.n)
    proj = frozenset(K for K in ivs
                     if not any(ext_dim(K, L, Q) and E.admits(K, L) for L in ivs))
    inj = frozenset(L for L in ivs
                    if not any(ext_dim(K, L, Q) and E.admits(K, L) for K in ivs))
    return proj, inj


@dataclass
class ClosureViolation:
    operation: str        # "pushout" or "pullback"
    quot: Interval
    sub: Interval
    along: tuple[Interval, Interval]
    result: tuple[Interval, Interval]


def validate_closure(E: ExactStructure) -> list[ClosureViolation]:
    """Check that admissible classes stay admissible under pushout along basis
    morphisms out of the sub term and pullback along basis morphisms into the
    quotient term.  An empty list means no violation was found."""
    Q = E.quiver
    ivs = all_intervals(Q.n)
    out = []
    for K, L in E.admitted_pairs():
        s = O.extension_ses(K, L, Q)
        for L2 in ivs:
            if L2 == L or hom(L, L2, Q) is None:
                continue
            h = O.canonical_morphism(L, L2, Q, source=s.sub)
            t = O.pushout(s, h)
            if O.ses_components(t)[0][0] and not E.admits(K, L2):
                out.append(ClosureViolation("pushout", K, L, (L, L2), (K, L2)))
        for K2 in ivs:
            if K2 == K or hom(K2, K, Q) is None:
                continue
            g = O.canonical_morphism(K2, K, Q, target=s.quot)
            t = O.pullback(s, g)
            if O.ses_components(t)[0][0] and not E.admits(K2, L):
                out.append(ClosureViolation("pullback", K, L, (K2, K), (K2, L)))
    return out


def all_structures(Q: Orientation) -> list[ExactStructure]:
    return [make_structure(Q, k) for k in BUILTIN]


def structure_from_pairs(Q: Orientation, pairs: Iterable[tuple[str, str]]) -> ExactStructure:
    return make_structure(Q, [(Interval.parse(a), Interval.parse(b)) for a, b in pairs])
