"""
Generic Jordan forms
====================

A generic nilpotent endomorphism of a representation has a Jordan type at
every vertex.  We estimate it by sampling over a prime field, then look for
objects that share it.
"""

from qexact.combinatorics import all_intervals, parse_interval_list, parse_orientation
from qexact.jordan import genjf_estimate, jr_probe, maximal_cjr_pairs, pair_constructions

Q = parse_orientation("R")
for text in ("1..2", "1..1,1..2", "2..2,1..2"):
    print(text, genjf_estimate(parse_interval_list(text), Q=Q))

###############################################################################
# In all of rep(1 -> 2 -> 3) several objects of dimension (1, 1, 1) look the
# same to the Jordan form.
Q = parse_orientation("RR")
rep = jr_probe(all_intervals(3), Q, 1)
for i, j in rep.collisions:
    a, b = (" + ".join(map(str, rep.objects[k][0])) for k in (i, j))
    print(f"{a}  ~  {b}")

###############################################################################
# Inside a maximal canonically Jordan recoverable category there are none.
for pr in maximal_cjr_pairs(3):
    J, T = pair_constructions(pr, Q)
    print(pr, len(J), "intervals,", len(jr_probe(J, Q, 2).collisions), "collisions")
