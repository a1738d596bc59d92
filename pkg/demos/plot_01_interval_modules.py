"""
Interval modules and their Hom/Ext tables
=========================================

Indecomposables of a type A quiver are interval modules.  We list them for
1 -> 2 <- 3, then recompute the same numbers from explicit matrices.
"""

from qexact import oracle
from qexact.combinatorics import all_intervals, classify_nonsplit, ext_dim, hom, parse_orientation

Q = parse_orientation("RL")
ivs = all_intervals(Q.n)

# nonzero Hom spaces, with the support of the basis morphism
for K in ivs:
    for L in ivs:
        J = hom(K, L, Q)
        if J is not None and K != L:
            print(f"Hom({K}, {L}) = 1, image {J}")

# non-split extensions and the middle term of each one
for K in ivs:
    for L in ivs:
        if ext_dim(K, L, Q):
            sh = classify_nonsplit(K, L, Q)
            print(f"0 -> {L} -> {' + '.join(map(str, sh.middle))} -> {K} -> 0  ({sh.kind})")

###############################################################################
# The matrix oracle agrees: Hom from the commutativity equations, Ext from a
# projective resolution.
mismatch = [(K, L) for K in ivs for L in ivs
            if oracle.ext_dim_resolution(oracle.interval_rep(K, Q), oracle.interval_rep(L, Q))
            != ext_dim(K, L, Q)]
print("oracle mismatches:", mismatch)
