"""Small exact linear algebra kernels.

Matrices are numpy arrays of dtype ``object`` holding Python ints and
``Fraction`` values, so every operation stays exact over Q.  Elimination is
done on plain lists, which is faster than element access through numpy for
the tiny systems that representations of type A quivers produce.

The ``*_mod_p`` helpers work over a prime field and are only used by the
Jordan-type sampler.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def as_exact(rows: Sequence[Sequence]) -> np.ndarray:
    """Build an object matrix from nested rows of ints or fractions."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    out = zeros(len(rows), ncols)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = x
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    if a.shape[1] < 1 << 10 and _small_ints(a) and _small_ints(b):
        # |entries| < 2^20 and inner dimension < 2^10 keep every sum below
        # 2^50, so machine integers are exact here and far faster
        return np.dot(a.astype(np.int64), b.astype(np.int64)).astype(object)
    return np.dot(a, b)


_SMALL = 1 << 20


def _small_ints(a: np.ndarray) -> bool:
    for x in a.flat:
        if type(x) is not int or not -_SMALL < x < _SMALL:
            return False
    return True


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def _integer_row(row) -> list[int]:
    """Scale a row of ints/fractions to a primitive integer row."""
    den = 1
    for x in row:
        if type(x) is Fraction and x.denominator != 1:
            den = lcm(den, x.denominator)
    out = [int(x * den) for x in row] if den != 1 else [int(x) for x in row]
    g = 0
    for x in out:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        out = [x // g for x in out]
    return out


def _exact(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def rref(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows of the reduced matrix and the pivot columns.
    Elimination runs fraction free on integer rows (the row space is
    unchanged by scaling), and pivots are normalised to 1 at the end.
    """
    rows = [_integer_row(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                if abs(rows[i][c]) == 1:
                    break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pv = pr[c]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                new = [a * x - b * y for x, y in zip(rows[i], pr)]
                h = 0
                for x in new:
                    if x:
                        h = gcd(h, x)
                        if h == 1:
                            break
                if h > 1:
                    new = [x // h for x in new]
                rows[i] = new
        pivots.append(c)
        r += 1
    out = []
    for row, c in zip(rows[:r], pivots):
        pv = row[c]
        if pv == 1:
            out.append(row)
        elif pv == -1:
            out.append([-x for x in row])
        else:
            out.append([_exact(Fraction(x, pv)) if x else 0 for x in row])
    return out, pivots


def _rows(a: np.ndarray) -> list[list]:
    return [list(a[i, :]) for i in range(a.shape[0])]


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(_rows(a), a.shape[1])[1])


def nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Basis of the right kernel, one vector per free column.

    The basis is the reduced echelon one: the free coordinate is 1, the other
    free coordinates are 0.  It depends only on the matrix, never on any
    random choice.
    """
    ncols = a.shape[1]
    red, pivots = rref(_rows(a), ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = np.empty(ncols, dtype=object)
        v.fill(0)
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution X of ``a @ X = b`` (b may be a matrix), or None."""
    if b.ndim == 1:
        x = solve(a, b.reshape(-1, 1))
        return None if x is None else x[:, 0]
    nr, nc = a.shape
    k = b.shape[1]
    aug = [list(a[i, :]) + list(b[i, :]) for i in range(nr)]
    red, pivots = rref(aug, nc + k)
    if pivots and pivots[-1] >= nc:
        return None
    x = zeros(nc, k)
    for row, p in zip(red, pivots):
        for j in range(k):
            x[p, j] = row[nc + j]
    return x


def inverse(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, identity(n))
    if x is None:
        raise ValueError("matrix is singular")
    return x


def left_inverse(a: np.ndarray) -> np.ndarray:
    """L with ``L @ a = I`` for a matrix of full column rank."""
    at = a.T
    return matmul(inverse(matmul(at, a)), at)


def right_inverse(a: np.ndarray) -> np.ndarray:
    """R with ``a @ R = I`` for a matrix of full row rank."""
    at = a.T
    return matmul(at, inverse(matmul(a, at)))


def column_basis(vectors: list[np.ndarray], dim: int) -> np.ndarray:
    out = zeros(dim, len(vectors))
    for j, v in enumerate(vectors):
        out[:, j] = v
    return out


def in_column_span(a: np.ndarray, v: np.ndarray) -> bool:
    if a.shape[1] == 0:
        return all(x == 0 for x in v)
    return solve(a, v) is not None


# -- prime field -------------------------------------------------------------

def to_mod_p(x, p: int) -> int:
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


def rank_mod_p(a: np.ndarray, p: int) -> int:
    rows = [[int(x) % p for x in a[i, :]] for i in range(a.shape[0])]
    ncols = a.shape[1] if a.ndim == 2 else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        pr = [x * inv % p for x in rows[r]]
        rows[r] = pr
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        r += 1
        if r == len(rows):
            break
    return r
