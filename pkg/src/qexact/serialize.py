"""Deterministic JSON and DOT output."""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, Sequence

from .tilting import Tilting, TiltingPoset


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def node_id(label: str) -> str:
    return "t" + hashlib.sha1(label.encode()).hexdigest()[:10]


def poset_json(P: TiltingPoset, classes: Iterable[Iterable[Tilting]] | None = None) -> dict:
    out = {
        "elements": [list(map(str, T.parts)) for T in P.elements],
        "covers": [list(c) for c in P.covers],
    }
    if classes is not None:
        out["classes"] = sorted(sorted(P.index(T) for T in cls) for cls in classes)
    return out


def poset_dot(P: TiltingPoset, classes: Sequence[Iterable[Tilting]] | None = None,
              name: str = "tilt") -> str:
    """Hasse diagram, bottom to top; optional clusters for a partition."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    ids = [node_id(T.label()) for T in P.elements]
    if classes is not None:
        groups = sorted(sorted(P.index(T) for T in cls) for cls in classes)
        for k, grp in enumerate(groups):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append("    style=rounded; color=gray;")
            for i in grp:
                lines.append(f'    {ids[i]} [label="{P.elements[i].label()}"];')
            lines.append("  }")
    else:
        for i, T in enumerate(P.elements):
            lines.append(f'  {ids[i]} [label="{T.label()}"];')
    for a, b in P.covers:
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
