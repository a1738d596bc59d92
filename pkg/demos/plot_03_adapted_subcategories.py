"""
Adapted, extension-closed, Serre
================================

A subcategory is adapted to an exact structure when every extension between
its objects is admissible.  Adapted does not imply extension-closed.
"""

from qexact.closure import extension_closure, gs, is_e_adapted, is_extension_closed
from qexact.combinatorics import format_intervals, parse_interval_set, parse_orientation
from qexact.exact import make_structure

Q = parse_orientation("RR")
E = make_structure(Q, "diamond")

C = parse_interval_set("2..3,1..2")
print("adapted:", is_e_adapted(C, E)[0])
print("GS-closed:", gs(C, E).fixpoint == C)
print("extension-closed:", is_extension_closed(C, Q))
print("extension closure:", format_intervals(extension_closure(C, Q)))

# a gluing extension is never admissible in the diamond structure
print(is_e_adapted(parse_interval_set("1..1,2..3"), E))
