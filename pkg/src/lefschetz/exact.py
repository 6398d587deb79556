"""Exact rational linear algebra: kernels and inertia of symmetric forms.

Entries are gmpy2 ``mpq`` rationals; inputs may be any integers.
"""
from __future__ import annotations

from math import gcd, lcm

from gmpy2 import mpq


def rref(rows, ncols: int):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    M = [[mpq(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [a - f * b for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def integer_kernel(rows, ncols: int) -> list[list[int]]:
    """Basis of {v : rows·v = 0}, each vector scaled to primitive integers."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [mpq(0)] * ncols
        v[f] = mpq(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        den = 1
        for x in v:
            den = lcm(den, int(x.denominator))
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        basis.append([x // g for x in ints])
    return basis


def inertia(S) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric matrix, by congruence.

    A nonzero diagonal entry is used as a 1x1 pivot; if the diagonal of the
    active block vanishes, a nonzero off-diagonal entry gives a hyperbolic
    2x2 pivot contributing one positive and one negative square.
    """
    n = len(S)
    M = [[mpq(x) for x in row] for row in S]
    active = list(range(n))
    plus = minus = 0
    while active:
        p = next((i for i in active if M[i][i] != 0), None)
        if p is not None:
            d = M[p][p]
            if d > 0:
                plus += 1
            else:
                minus += 1
            active.remove(p)
            row_p = M[p]
            for i in active:
                f = M[i][p]
                if f:
                    f = f / d
                    Mi = M[i]
                    for j in active:
                        if row_p[j]:
                            Mi[j] -= f * row_p[j]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and M[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = M[i0][j0]
        plus += 1
        minus += 1
        active.remove(i0)
        active.remove(j0)
        Ri, Rj = M[i0], M[j0]
        # Schur complement with B = [[0,b],[b,0]], B^-1 = [[0,1/b],[1/b,0]]
        for k in active:
            ci, cj = M[k][i0], M[k][j0]
            if not ci and not cj:
                continue
            Mk = M[k]
            for l in active:
                delta = ci * Rj[l] + cj * Ri[l]
                if delta:
                    Mk[l] -= delta / b
    return plus, minus, n - plus - minus


def signature(S) -> int:
    p, m, _ = inertia(S)
    return p - m


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])
