"""Explicit matrix representations over Q and the linear algebra on them.

This is the independent check on ``qexact.combinatorics``: Hom spaces,
kernels, decompositions and Ext are computed here from the matrices alone.
Short exact sequences are handled as ``SesWitness`` objects whose end terms
are in canonical form, i.e. built by ``build_rep`` from a sorted list of
intervals, so that each summand occupies known coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from graphlib import TopologicalSorter
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .combinatorics import (
    DomainError, Interval, Orientation, all_intervals, check_in_range, hom)


class MatrixRep:
    """A representation: one vector space dimension per vertex and one matrix
    per arrow.  ``maps[i]`` belongs to the (0-based) arrow i and has shape
    ``dims[target] x dims[source]``.

    ``parts`` is set when the representation is the canonical direct sum of
    interval modules produced by ``build_rep``.
    """

    def __init__(self, quiver: Orientation, dims: Sequence[int],
                 maps: Sequence[np.ndarray], parts: tuple[Interval, ...] | None = None):
        self.quiver = quiver
        self.dims = tuple(dims)
        self.maps = tuple(maps)
        self.parts = parts
        if len(self.dims) != quiver.n or len(self.maps) != quiver.n - 1:
            raise ValueError("representation does not match the quiver")
        for i, m in enumerate(self.maps):
            s, t = quiver.arrow_ends(i)
            if m.shape != (self.dims[t], self.dims[s]):
                raise ValueError(f"arrow {i}: shape {m.shape}, expected "
                                 f"{(self.dims[t], self.dims[s])}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __repr__(self):
        tag = f" parts={[str(p) for p in self.parts]}" if self.parts is not None else ""
        return f"MatrixRep({self.quiver.dirs!r}, dims={self.dims}{tag})"


class Morphism:
    def __init__(self, source: MatrixRep, target: MatrixRep, blocks: Sequence[np.ndarray]):
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        for q, blk in enumerate(self.blocks):
            if blk.shape != (target.dims[q], source.dims[q]):
                raise ValueError(f"vertex {q}: block shape {blk.shape}")

    def commutes(self) -> bool:
        Q = self.source.quiver
        for i in range(Q.n - 1):
            s, t = Q.arrow_ends(i)
            lhs = la.matmul(self.target.maps[i], self.blocks[s])
            rhs = la.matmul(self.blocks[t], self.source.maps[i])
            if not la.is_zero(lhs - rhs):
                return False
        return True

    def is_zero(self) -> bool:
        return all(la.is_zero(b) for b in self.blocks)

    def is_mono(self) -> bool:
        return all(la.rank(b) == b.shape[1] for b in self.blocks)

    def is_epi(self) -> bool:
        return all(la.rank(b) == b.shape[0] for b in self.blocks)

    def is_iso(self) -> bool:
        return self.is_mono() and self.is_epi()

    def flat(self) -> list:
        out = []
        for b in self.blocks:
            out.extend(b.flat)
        return out


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    return Morphism(f.source, g.target, [la.matmul(gb, fb) for gb, fb in zip(g.blocks, f.blocks)])


def zero_rep(Q: Orientation) -> MatrixRep:
    return build_rep((), Q)


# -- canonical direct sums of interval modules --------------------------------

def _coords(parts: Sequence[Interval], n: int) -> list[dict[int, int]]:
    """coords[q][i] is the coordinate of summand i at 0-based vertex q."""
    coords: list[dict[int, int]] = [dict() for _ in range(n)]
    for i, K in enumerate(parts):
        for v in K.vertices():
            c = coords[v - 1]
            c[i] = len(c)
    return coords


def build_rep(parts: Iterable[Interval], Q: Orientation) -> MatrixRep:
    """Direct sum of interval modules, summands sorted by (b, e)."""
    parts = tuple(sorted(check_in_range(K, Q) for K in parts))
    coords = _coords(parts, Q.n)
    dims = [len(c) for c in coords]
    maps = []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        m = la.zeros(dims[t], dims[s])
        for j, cs in coords[s].items():
            ct = coords[t].get(j)
            if ct is not None:
                m[ct, cs] = 1
        maps.append(m)
    return MatrixRep(Q, dims, maps, parts)


def summand_coords(M: MatrixRep) -> list[dict[int, int]]:
    if M.parts is None:
        raise ValueError("representation is not in canonical form")
    return _coords(M.parts, M.quiver.n)


def canonical_morphism(K: Interval, L: Interval, Q: Orientation,
                       source: MatrixRep | None = None,
                       target: MatrixRep | None = None) -> Morphism | None:
    """The basis morphism X_K -> X_L: identity on the witness interval."""
    J = hom(K, L, Q)
    if J is None:
        return None
    src = source or build_rep([K], Q)
    tgt = target or build_rep([L], Q)
    blocks = []
    for q in range(Q.n):
        b = la.zeros(tgt.dims[q], src.dims[q])
        if (q + 1) in J:
            b[0, 0] = 1
        blocks.append(b)
    return Morphism(src, tgt, blocks)


# -- Hom spaces ---------------------------------------------------------------

def hom_basis(M: MatrixRep, N: MatrixRep) -> list[Morphism]:
    """Basis of Hom(M, N) in reduced echelon form.

    Unknowns are the entries of the vertex blocks, vertex by vertex and row
    major; the basis comes straight from the nullspace of the commutativity
    equations and is therefore deterministic.
    """
    Q = M.quiver
    offs = []
    nvar = 0
    for q in range(Q.n):
        offs.append(nvar)
        nvar += N.dims[q] * M.dims[q]
    if nvar == 0:
        return []
    eqs: list[list] = []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        ma, na = M.maps[i], N.maps[i]
        ms, mt, ns_, nt = M.dims[s], M.dims[t], N.dims[s], N.dims[t]
        # (N_a phi_s - phi_t M_a)[r, c] = 0
        for r in range(nt):
            for c in range(ms):
                row = [0] * nvar
                nz = False
                for k in range(ns_):
                    x = na[r, k]
                    if x != 0:
                        row[offs[s] + k * ms + c] += x
                        nz = True
                for k in range(mt):
                    x = ma[k, c]
                    if x != 0:
                        row[offs[t] + r * mt + k] -= x
                        nz = True
                if nz:
                    eqs.append(row)
    if eqs:
        basis = la.nullspace(la.as_exact(eqs))
    else:
        basis = []
        for f in range(nvar):
            v = np.empty(nvar, dtype=object)
            v.fill(0)
            v[f] = 1
            basis.append(v)
    out = []
    for v in basis:
        blocks = []
        for q in range(Q.n):
            blk = la.zeros(N.dims[q], M.dims[q])
            o = offs[q]
            for r in range(N.dims[q]):
                for c in range(M.dims[q]):
                    blk[r, c] = v[o + r * M.dims[q] + c]
            blocks.append(blk)
        out.append(Morphism(M, N, blocks))
    return out


def hom_dim(M: MatrixRep, N: MatrixRep) -> int:
    return len(hom_basis(M, N))


@lru_cache(maxsize=None)
def interval_rep(K: Interval, Q: Orientation) -> MatrixRep:
    return build_rep([K], Q)


@lru_cache(maxsize=None)
def interval_hom_dim(K: Interval, L: Interval, Q: Orientation) -> int:
    return hom_dim(interval_rep(K, Q), interval_rep(L, Q))


# -- kernels and cokernels ----------------------------------------------------

@dataclass
class KerCoker:
    ker: MatrixRep
    incl: Morphism
    coker: MatrixRep
    proj: Morphism


def kernel_cokernel(f: Morphism) -> KerCoker:
    M, N = f.source, f.target
    Q = M.quiver
    kb = []   # columns spanning ker f_q inside M_q
    cb = []   # rows cutting out coker f_q from N_q
    for q in range(Q.n):
        kb.append(la.column_basis(la.nullspace(f.blocks[q]), M.dims[q]))
        rows = la.nullspace(f.blocks[q].T)
        c = la.zeros(len(rows), N.dims[q])
        for j, r in enumerate(rows):
            c[j, :] = r
        cb.append(c)
    kmaps, cmaps = [], []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        if kb[t].shape[1] and kb[s].shape[1]:
            kmaps.append(la.matmul(la.left_inverse(kb[t]), la.matmul(M.maps[i], kb[s])))
        else:
            kmaps.append(la.zeros(kb[t].shape[1], kb[s].shape[1]))
        if cb[t].shape[0] and cb[s].shape[0]:
            cmaps.append(la.matmul(la.matmul(cb[t], N.maps[i]), la.right_inverse(cb[s])))
        else:
            cmaps.append(la.zeros(cb[t].shape[0], cb[s].shape[0]))
    ker = MatrixRep(Q, [k.shape[1] for k in kb], kmaps)
    coker = MatrixRep(Q, [c.shape[0] for c in cb], cmaps)
    return KerCoker(ker, Morphism(ker, M, kb), coker, Morphism(N, coker, cb))


# -- decomposition ------------------------------------------------------------

@lru_cache(maxsize=None)
def _hom_order(Q: Orientation) -> tuple[Interval, ...]:
    """Intervals in an order where nonzero Hom only goes forwards."""
    ivs = all_intervals(Q.n)
    ts = TopologicalSorter()
    for K in ivs:
        ts.add(K)
        for L in ivs:
            if K != L and interval_hom_dim(K, L, Q):
                ts.add(L, K)
    order = tuple(ts.static_order())
    return order


def _interval_hom_system(K: Interval, M: MatrixRep) -> tuple[dict[int, int], int, list[list]]:
    """Hom(X_K, M) as vectors v_q in M_q (q in K) compatible with the arrows
    inside K and killed by the arrows leaving K.

    Returns the offset of each vertex block, the number of unknowns and the
    equations.
    """
    Q = M.quiver
    offs, nvar = {}, 0
    for v in K.vertices():
        offs[v - 1] = nvar
        nvar += M.dims[v - 1]
    eqs = []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        if s not in offs:
            continue
        m = M.maps[i]
        for r in range(M.dims[t]):
            row = [0] * nvar
            for k in range(M.dims[s]):
                row[offs[s] + k] = m[r, k]
            if t in offs:
                row[offs[t] + r] -= 1
            eqs.append(row)
    return offs, nvar, eqs


def _hom_dim_from_interval(K: Interval, M: MatrixRep) -> int:
    offs, nvar, eqs = _interval_hom_system(K, M)
    if nvar == 0 or not eqs:
        return nvar
    return nvar - len(la.rref(eqs, nvar)[1])


def _interval_hom_vectors(K: Interval, M: MatrixRep) -> tuple[dict[int, int], list[np.ndarray]]:
    offs, nvar, eqs = _interval_hom_system(K, M)
    if nvar == 0:
        return offs, []
    if not eqs:
        return offs, list(la.identity(nvar).T)
    return offs, la.nullspace(la.as_exact(eqs))


def decompose(M: MatrixRep) -> tuple[Interval, ...]:
    """Interval summands of M with multiplicity, sorted.

    Solves the unitriangular system dim Hom(X_K, M) = sum_L m_L dim Hom(X_K, X_L).
    """
    if M.parts is not None:
        return M.parts
    Q = M.quiver
    supp = [q + 1 for q in range(Q.n) if M.dims[q]]
    if not supp:
        return ()
    cand = [K for K in _hom_order(Q) if all(M.dims[v - 1] for v in K.vertices())]
    h = {K: _hom_dim_from_interval(K, M) for K in cand}
    mult: dict[Interval, int] = {}
    for idx in range(len(cand) - 1, -1, -1):
        K = cand[idx]
        m = h[K] - sum(mult[L] * interval_hom_dim(K, L, Q) for L in cand[idx + 1:])
        if m < 0:
            raise AssertionError(f"negative multiplicity for {K}")
        mult[K] = m
    parts = tuple(sorted(K for K, m in mult.items() for _ in range(m)))
    dims = [0] * Q.n
    for K in parts:
        for v in K.vertices():
            dims[v - 1] += 1
    if tuple(dims) != M.dims:
        raise AssertionError(f"decomposition {parts} does not add up to {M.dims}")
    return parts


def find_isomorphism(M: MatrixRep, N: MatrixRep, tries: int = 40) -> Morphism | None:
    """An isomorphism M -> N if one is found among random combinations of a
    Hom basis.  Isomorphic pairs fail only with negligible probability, and
    the result is always verified.

    When M is canonical, each summand is mapped independently through the
    much smaller space Hom(X_K, N).
    """
    if M.dims != N.dims:
        return None
    Q = M.quiver
    if M.total_dim == 0:
        return Morphism(M, N, [la.zeros(d, d) for d in M.dims])
    if M.parts is not None:
        coords = summand_coords(M)
        spaces = [_interval_hom_vectors(K, N) for K in M.parts]
        if any(not vecs for _, vecs in spaces):
            return None

        def combine(coeff_lists):
            blocks = [la.zeros(N.dims[q], M.dims[q]) for q in range(Q.n)]
            for i, ((offs, vecs), cs) in enumerate(zip(spaces, coeff_lists)):
                v = sum((c * x for c, x in zip(cs, vecs)), np.zeros(len(vecs[0]), dtype=object))
                for q, o in offs.items():
                    blocks[q][:, coords[q][i]] = v[o:o + N.dims[q]]
            return Morphism(M, N, blocks)
        sizes = [len(vecs) for _, vecs in spaces]
    else:
        basis = hom_basis(M, N)
        if not basis:
            return None

        def combine(coeff_lists):
            (cs,) = coeff_lists
            return Morphism(M, N, [
                sum((c * b.blocks[q] for c, b in zip(cs, basis)), la.zeros(N.dims[q], M.dims[q]))
                for q in range(Q.n)])
        sizes = [len(basis)]
    rng = random.Random(0x5eed)
    for attempt in range(tries):
        if attempt == 0:
            coeffs = [[1] * k for k in sizes]
        else:
            coeffs = [[rng.randint(-50, 50) for _ in range(k)] for k in sizes]
        f = combine(coeffs)
        if f.is_iso():
            return f
    return None


def canonical_form(M: MatrixRep) -> tuple[MatrixRep, Morphism]:
    """Canonical direct sum isomorphic to M, with an isomorphism into M."""
    if M.parts is not None:
        return M, Morphism(M, M, [la.identity(d) for d in M.dims])
    C = build_rep(decompose(M), M.quiver)
    iso = find_isomorphism(C, M)
    if iso is None:
        raise AssertionError("could not find an isomorphism to the canonical form")
    return C, iso


# -- approximation morphisms ---------------------------------------------------

def epi_onto(parts: Sequence[Interval], Z: Interval, Q: Orientation) -> Morphism | None:
    """Sum of basis morphisms ``build_rep(parts) -> X_Z`` if it is onto.

    Coefficients are all ones; if that fails the sequence 1, 2, 3, ... is
    tried before giving up.
    """
    src = build_rep(parts, Q)
    tgt = interval_rep(Z, Q)
    wit = [hom(K, Z, Q) for K in src.parts]
    covered = set()
    for J in wit:
        if J is not None:
            covered.update(J.vertices())
    if covered != set(Z.vertices()):
        return None
    coords = summand_coords(src)
    for coeffs in ([1] * len(wit), list(range(1, len(wit) + 1))):
        blocks = []
        for q in range(Q.n):
            b = la.zeros(tgt.dims[q], src.dims[q])
            for i, c in coords[q].items():
                if wit[i] is not None and (q + 1) in wit[i]:
                    b[0, c] = coeffs[i]
            blocks.append(b)
        g = Morphism(src, tgt, blocks)
        if g.is_epi():
            return g
    return None


def mono_into(Z: Interval, parts: Sequence[Interval], Q: Orientation) -> Morphism | None:
    """Dual of ``epi_onto``: sum of basis morphisms ``X_Z -> build_rep(parts)``."""
    src = interval_rep(Z, Q)
    tgt = build_rep(parts, Q)
    wit = [hom(Z, K, Q) for K in tgt.parts]
    covered = set()
    for J in wit:
        if J is not None:
            covered.update(J.vertices())
    if covered != set(Z.vertices()):
        return None
    coords = summand_coords(tgt)
    for coeffs in ([1] * len(wit), list(range(1, len(wit) + 1))):
        blocks = []
        for q in range(Q.n):
            b = la.zeros(tgt.dims[q], src.dims[q])
            for i, c in coords[q].items():
                if wit[i] is not None and (q + 1) in wit[i]:
                    b[c, 0] = coeffs[i]
            blocks.append(b)
        f = Morphism(src, tgt, blocks)
        if f.is_mono():
            return f
    return None


# -- short exact sequences -----------------------------------------------------

@dataclass
class SesWitness:
    """0 -> sub --incl--> mid --proj--> quot -> 0 with canonical end terms."""
    sub: MatrixRep
    mid: MatrixRep
    quot: MatrixRep
    incl: Morphism
    proj: Morphism

    @property
    def sub_parts(self) -> tuple[Interval, ...]:
        return self.sub.parts

    @property
    def quot_parts(self) -> tuple[Interval, ...]:
        return self.quot.parts

    def is_exact(self) -> bool:
        if not (self.incl.commutes() and self.proj.commutes()):
            return False
        if not (self.incl.is_mono() and self.proj.is_epi()):
            return False
        if not compose(self.proj, self.incl).is_zero():
            return False
        return all(self.sub.dims[q] + self.quot.dims[q] == self.mid.dims[q]
                   for q in range(self.mid.quiver.n))

    def middle_parts(self) -> tuple[Interval, ...]:
        return decompose(self.mid)


def ses_from_epi(g: Morphism) -> SesWitness:
    """Complete an epimorphism onto a canonical representation."""
    if g.target.parts is None:
        raise ValueError("target must be canonical")
    kc = kernel_cokernel(g)
    sub, iso = canonical_form(kc.ker)
    return SesWitness(sub, g.source, g.target, compose(kc.incl, iso), g)


def ses_from_mono(f: Morphism) -> SesWitness:
    """Complete a monomorphism out of a canonical representation."""
    if f.source.parts is None:
        raise ValueError("source must be canonical")
    kc = kernel_cokernel(f)
    quot, iso = canonical_form(kc.coker)
    # iso: quot -> coker; we need mid -> quot
    back = Morphism(kc.coker, quot, [la.inverse(b) if b.shape[0] else b for b in iso.blocks])
    return SesWitness(f.source, f.target, quot, f, compose(back, kc.proj))


def _cocycle(s: SesWitness) -> list[np.ndarray]:
    """Arrow components c_a : quot_s -> sub_t of the class of s.

    After splitting each vertex space of the middle term as sub + quot, the
    arrow maps become [[sub_a, c_a], [0, quot_a]].
    """
    Q = s.mid.quiver
    rho, sigma = [], []
    for q in range(Q.n):
        a, c = s.sub.dims[q], s.quot.dims[q]
        if c:
            sg = la.right_inverse(s.proj.blocks[q])
        else:
            sg = la.zeros(s.mid.dims[q], 0)
        if a:
            P = la.zeros(s.mid.dims[q], a + c)
            P[:, :a] = s.incl.blocks[q]
            P[:, a:] = sg
            rho.append(la.inverse(P)[:a, :])
        else:
            rho.append(la.zeros(0, s.mid.dims[q]))
        sigma.append(sg)
    out = []
    for i in range(Q.n - 1):
        src, tgt = Q.arrow_ends(i)
        out.append(la.matmul(rho[tgt], la.matmul(s.mid.maps[i], sigma[src])))
    return out


def _component_nonsplit(sub: MatrixRep, quot: MatrixRep, b: int, a: int,
                        cocycle: list[np.ndarray]) -> bool:
    """Is the (quot part a, sub part b) component of the class non-zero?

    The component is the cocycle restricted to those summands; it is a
    coboundary exactly when it is split.
    """
    Q = sub.quiver
    sc, qc = summand_coords(sub), summand_coords(quot)
    shared = [q for q in range(Q.n) if a in qc[q] and b in sc[q]]
    col = {q: j for j, q in enumerate(shared)}
    rows_delta, vec = [], []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        if a not in qc[s] or b not in sc[t]:
            continue
        # delta(h)_i = sub_i h_s - h_t quot_i
        row = [0] * len(shared)
        if s in col:
            row[col[s]] += sub.maps[i][sc[t][b], sc[s][b]] if b in sc[s] else 0
        if t in col:
            row[col[t]] -= quot.maps[i][qc[t][a], qc[s][a]] if a in qc[t] else 0
        rows_delta.append(row)
        vec.append(cocycle[i][sc[t][b], qc[s][a]])
    if not vec or all(x == 0 for x in vec):
        return False
    if not shared:
        return True
    D = la.as_exact(rows_delta)
    v = np.empty(len(vec), dtype=object)
    v[:] = vec
    return not la.in_column_span(D, v)


def ses_components(s: SesWitness) -> tuple[tuple[bool, ...], ...]:
    """Boolean matrix, rows = quot parts, columns = sub parts.

    Entry (a, b) says whether the component of the extension class in
    Ext^1(quot_a, sub_b) is non-split.
    """
    c = _cocycle(s)
    return tuple(tuple(_component_nonsplit(s.sub, s.quot, b, a, c)
                       for b in range(len(s.sub_parts)))
                 for a in range(len(s.quot_parts)))


def nonsplit_pairs(s: SesWitness) -> tuple[tuple[Interval, Interval], ...]:
    """(quot, sub) interval pairs carrying a non-split component."""
    comps = ses_components(s)
    out = set()
    for a, row in enumerate(comps):
        for b, ns in enumerate(row):
            if ns:
                out.add((s.quot_parts[a], s.sub_parts[b]))
    return tuple(sorted(out))


def is_split(s: SesWitness) -> bool:
    """Whether a retraction mid -> sub of the inclusion exists."""
    basis = hom_basis(s.mid, s.sub)
    if s.sub.total_dim == 0:
        return True
    if not basis:
        return False
    target = []
    for d in s.sub.dims:
        target.extend(la.identity(d).flat)
    cols = [compose(r, s.incl).flat() for r in basis]
    A = la.zeros(len(target), len(cols))
    for j, col in enumerate(cols):
        A[:, j] = col
    v = np.empty(len(target), dtype=object)
    v[:] = target
    return la.solve(A, v) is not None


def component_split_by_lifting(s: SesWitness, a: int, b: int) -> bool:
    """Second route to one component: pull back along quot_a -> quot, then
    ask whether the projection sub -> sub_b extends over the new middle."""
    Q = s.mid.quiver
    qa = interval_rep(s.quot_parts[a], Q)
    qcoords = summand_coords(s.quot)
    iota = Morphism(qa, s.quot, [
        _unit_column(s.quot.dims[q], qcoords[q].get(a)) if qa.dims[q] else la.zeros(s.quot.dims[q], 0)
        for q in range(Q.n)])
    pb = pullback(s, iota)
    sb = interval_rep(s.sub_parts[b], Q)
    scoords = summand_coords(s.sub)
    pi = Morphism(s.sub, sb, [
        _unit_column(s.sub.dims[q], scoords[q].get(b)).T if sb.dims[q] else la.zeros(0, s.sub.dims[q])
        for q in range(Q.n)])
    basis = hom_basis(pb.mid, sb)
    target = pi.flat()
    if all(x == 0 for x in target):
        return True
    if not basis:
        return False
    A = la.zeros(len(target), len(basis))
    for j, r in enumerate(basis):
        A[:, j] = compose(r, pb.incl).flat()
    v = np.empty(len(target), dtype=object)
    v[:] = target
    return la.solve(A, v) is not None


def _unit_column(dim: int, idx: int | None) -> np.ndarray:
    v = la.zeros(dim, 1)
    if idx is not None:
        v[idx, 0] = 1
    return v


def ses_from_cocycle(quot: MatrixRep, sub: MatrixRep, cocycle: Sequence[np.ndarray]) -> SesWitness:
    """Middle term with arrow maps [[sub_a, c_a], [0, quot_a]]."""
    Q = quot.quiver
    dims = [sub.dims[q] + quot.dims[q] for q in range(Q.n)]
    maps = []
    for i in range(Q.n - 1):
        s, t = Q.arrow_ends(i)
        m = la.zeros(dims[t], dims[s])
        a_s, a_t = sub.dims[s], sub.dims[t]
        m[:a_t, :a_s] = sub.maps[i]
        m[:a_t, a_s:] = cocycle[i]
        m[a_t:, a_s:] = quot.maps[i]
        maps.append(m)
    mid = MatrixRep(Q, dims, maps)
    incl, proj = [], []
    for q in range(Q.n):
        a, c = sub.dims[q], quot.dims[q]
        i_q = la.zeros(a + c, a)
        p_q = la.zeros(c, a + c)
        for k in range(a):
            i_q[k, k] = 1
        for k in range(c):
            p_q[k, a + k] = 1
        incl.append(i_q)
        proj.append(p_q)
    return SesWitness(sub, mid, quot, Morphism(sub, mid, incl), Morphism(mid, quot, proj))


def extension_ses(quot: Interval, sub: Interval, Q: Orientation) -> SesWitness | None:
    """A non-split sequence 0 -> X_sub -> E -> X_quot -> 0, or None if Ext vanishes."""
    A, C = interval_rep(sub, Q), interval_rep(quot, Q)
    arrows = [i for i in range(Q.n - 1)
              if C.dims[Q.arrow_ends(i)[0]] and A.dims[Q.arrow_ends(i)[1]]]
    for i in arrows:
        coc = [la.zeros(A.dims[Q.arrow_ends(k)[1]], C.dims[Q.arrow_ends(k)[0]])
               for k in range(Q.n - 1)]
        coc[i][0, 0] = 1
        s = ses_from_cocycle(C, A, coc)
        if ses_components(s)[0][0]:
            return s
    return None


def pushout(s: SesWitness, h: Morphism) -> SesWitness:
    """Pushout of s along h: sub -> A' (A' canonical)."""
    if h.source is not s.sub and h.source.dims != s.sub.dims:
        raise ValueError("h must start at the sub term")
    c = _cocycle(s)
    Q = s.mid.quiver
    new = [la.matmul(h.blocks[Q.arrow_ends(i)[1]], c[i]) for i in range(Q.n - 1)]
    return ses_from_cocycle(s.quot, h.target, new)


def pullback(s: SesWitness, g: Morphism) -> SesWitness:
    """Pullback of s along g: C' -> quot (C' canonical)."""
    c = _cocycle(s)
    Q = s.mid.quiver
    new = [la.matmul(c[i], g.blocks[Q.arrow_ends(i)[0]]) for i in range(Q.n - 1)]
    return ses_from_cocycle(g.source, s.sub, new)


def direct_sum_ses(s1: SesWitness, s2: SesWitness) -> SesWitness:
    """Direct sum of two sequences, brought back into canonical form."""
    Q = s1.mid.quiver

    def dsum(M, N):
        dims = [M.dims[q] + N.dims[q] for q in range(Q.n)]
        maps = []
        for i in range(Q.n - 1):
            s, t = Q.arrow_ends(i)
            m = la.zeros(dims[t], dims[s])
            m[:M.dims[t], :M.dims[s]] = M.maps[i]
            m[M.dims[t]:, M.dims[s]:] = N.maps[i]
            maps.append(m)
        return MatrixRep(Q, dims, maps)

    def dmor(f, g, src, tgt):
        blocks = []
        for q in range(Q.n):
            b = la.zeros(tgt.dims[q], src.dims[q])
            b[:f.target.dims[q], :f.source.dims[q]] = f.blocks[q]
            b[f.target.dims[q]:, f.source.dims[q]:] = g.blocks[q]
            blocks.append(b)
        return Morphism(src, tgt, blocks)

    sub, mid, quot = dsum(s1.sub, s2.sub), dsum(s1.mid, s2.mid), dsum(s1.quot, s2.quot)
    incl = dmor(s1.incl, s2.incl, sub, mid)
    proj = dmor(s1.proj, s2.proj, mid, quot)
    csub, isub = canonical_form(sub)
    cquot, iquot = canonical_form(quot)
    back = Morphism(quot, cquot, [la.inverse(b) if b.shape[0] else b for b in iquot.blocks])
    return SesWitness(csub, mid, cquot, compose(incl, isub), compose(back, proj))


# -- Ext from a projective resolution ----------------------------------------------

def projective_cover(M: MatrixRep) -> Morphism:
    """Projective cover P0 -> M with P0 a canonical sum of P(q) = X_{reach(q)}."""
    Q = M.quiver
    gens = []   # (interval, vertex, vector)
    for q in range(Q.n):
        d = M.dims[q]
        if not d:
            continue
        images = []
        for i in range(Q.n - 1):
            s, t = Q.arrow_ends(i)
            if t == q:
                for j in range(M.dims[s]):
                    images.append(M.maps[i][:, j])
        span = la.column_basis(images, d) if images else la.zeros(d, 0)
        basis = [span[:, j] for j in range(span.shape[1])]
        r = la.rank(span)
        for k in range(d):
            e = np.empty(d, dtype=object)
            e.fill(0)
            e[k] = 1
            trial = la.column_basis(basis + [e], d)
            if la.rank(trial) > r:
                basis.append(e)
                r += 1
                gens.append((Q.reachable(q + 1), q, e))
    gens.sort(key=lambda g: (g[0], g[1]))
    P0 = build_rep([g[0] for g in gens], Q)
    coords = summand_coords(P0)
    blocks = [la.zeros(M.dims[r], P0.dims[r]) for r in range(Q.n)]
    for idx, (K, q, v) in enumerate(gens):
        # walk from q outwards along the arrows, pushing v forward
        vec = {q: v}
        frontier = [q]
        while frontier:
            x = frontier.pop()
            for i in range(Q.n - 1):
                s, t = Q.arrow_ends(i)
                if s == x and t not in vec:
                    vec[t] = la.matmul(M.maps[i], vec[x].reshape(-1, 1))[:, 0]
                    frontier.append(t)
        for r, w in vec.items():
            blocks[r][:, coords[r][idx]] = w
    pi = Morphism(P0, M, blocks)
    if not pi.is_epi():
        raise AssertionError("projective cover is not onto")
    return pi


def ext_dim_resolution(M: MatrixRep, N: MatrixRep) -> int:
    """dim Ext^1(M, N) as the cokernel of Hom(P0, N) -> Hom(P1, N)."""
    pi = projective_cover(M)
    kc = kernel_cokernel(pi)
    h1 = hom_basis(kc.ker, N)
    if not h1:
        return 0
    h0 = hom_basis(pi.source, N)
    if not h0:
        return len(h1)
    cols = [compose(phi, kc.incl).flat() for phi in h0]
    A = la.zeros(len(cols[0]), len(cols))
    for j, c in enumerate(cols):
        A[:, j] = c
    return len(h1) - la.rank(A)


# -- JSON helpers -------------------------------------------------------------

def matrix_to_json(m: np.ndarray) -> list[list[str]]:
    """Entries as exact ``"p/q"`` strings."""
    out = []
    for i in range(m.shape[0]):
        row = []
        for x in m[i, :]:
            x = Fraction(x)
            row.append(f"{x.numerator}/{x.denominator}")
        out.append(row)
    return out


def rep_to_json(M: MatrixRep) -> dict:
    return {"quiver": M.quiver.dirs, "dims": list(M.dims),
            "maps": [matrix_to_json(m) for m in M.maps]}
