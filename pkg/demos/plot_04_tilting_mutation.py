"""
Tilting modules and E-mutation
==============================

There are Catalan-many tilting modules.  Mutation along admissible
approximation sequences splits them into reachability classes, and the GS
closure of any member is the union of its class.
"""

from qexact.closure import gs
from qexact.combinatorics import parse_orientation
from qexact.exact import make_structure
from qexact.tilting import class_extrema, enumerate_tiltings, equivalence_classes, mutations

Q = parse_orientation("RLR")
print(len(enumerate_tiltings(Q)), "tilting modules")

E = make_structure(Q, "diamond")
T = enumerate_tiltings(Q)[0]
for m in mutations(T, E):
    print(f"{T.label()}  --{m.direction} at {m.at}-->  {m.result.label()}")

for cls in equivalence_classes(E):
    ex = class_extrema(cls, E)
    union = frozenset().union(*(S.as_set() for S in cls))
    assert gs(ex.minimum.as_set(), E).fixpoint == union
    print(f"{len(cls)} tiltings, min {ex.minimum.label()}, max {ex.maximum.label()}")
