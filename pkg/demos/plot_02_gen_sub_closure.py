"""
The GS closure of a subcategory
===============================

Alternate admissible quotients and admissible subobjects until nothing new
appears.  Seeded with seven intervals on an A_7 quiver under the diamond
structure, the closure takes two rounds and ends with fifteen intervals.
"""

from qexact.closure import ck, gs
from qexact.combinatorics import format_intervals, parse_interval_set, parse_orientation
from qexact.exact import make_structure

Q = parse_orientation("RLRRLR")
E = make_structure(Q, "diamond")
C = parse_interval_set("5..5,5..7,5..6,2..3,1..3,1..5,3..5")

tr = gs(C, E)
for i in range(1, len(tr.stages)):
    print(f"round {i} adds", format_intervals(tr.added(i)))
print(len(tr.fixpoint), "intervals in the closure")

###############################################################################
# Using only cokernels and kernels of admissible sequences inside the current
# stage gives a smaller closure from a slightly smaller seed.
C6 = C - parse_interval_set("1..3")
print("CK:", len(ck(C6, E).fixpoint), " GS:", len(gs(C6, E).fixpoint))
