"""
A Boolean quotient of the tilting lattice
=========================================

Right mutation orders the tilting modules into a lattice.  The diamond
reachability classes glue into a lattice congruence, and the quotient is a
Boolean lattice with n - 1 atoms.  The DOT output can be drawn with Graphviz.
"""

from qexact import serialize
from qexact.combinatorics import all_orientations
from qexact.exact import make_structure
from qexact.lattice import congruence_check, quotient_boolean_check
from qexact.tilting import equivalence_classes, tilting_poset

for n in range(2, 5):
    for Q in all_orientations(n):
        P = tilting_poset(make_structure(Q, "max"))
        classes = equivalence_classes(make_structure(Q, "diamond"))
        rep = quotient_boolean_check(P, classes)
        print(Q, len(P.elements), congruence_check(P, classes).ok, rep.size, rep.boolean)

Q = all_orientations(4)[2]
dot = serialize.poset_dot(tilting_poset(make_structure(Q, "max")),
                          equivalence_classes(make_structure(Q, "diamond")))
print("\n".join(dot.splitlines()[:12]))
