# Compiled GF(q) kernels over canonical encodings, using exp/log/Zech tables.
# Table layout is FieldCtx's: exp[k] = omega^k, log[x] (log[0] = -1),
# zech[k] = log(1 + omega^k) or -1 when 1 + omega^k = 0.
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _add(a, b, exp, log, zech, qm1):
    if a == 0:
        return b
    if b == 0:
        return a
    la = log[a]
    d = log[b] - la
    if d < 0:
        d += qm1
    z = zech[d]
    if z < 0:
        return 0
    e = la + z
    if e >= qm1:
        e -= qm1
    return exp[e]


@njit(cache=True, inline="always")
def _mul(a, b, exp, log, qm1):
    if a == 0 or b == 0:
        return 0
    e = log[a] + log[b]
    if e >= qm1:
        e -= qm1
    return exp[e]


@njit(cache=True, inline="always")
def _neg(a, exp, log, qm1):
    if a == 0:
        return 0
    e = log[a] + qm1 // 2
    if e >= qm1:
        e -= qm1
    return exp[e]


@njit(cache=True, inline="always")
def _inv(a, exp, log, qm1):
    e = qm1 - log[a]
    if e >= qm1:
        e -= qm1
    return exp[e]


@njit(cache=True)
def gram(G, exp, log, zech, qm1):
    """G @ G.T over GF(q)."""
    k, n = G.shape
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i, k):
            acc = 0
            for c in range(n):
                acc = _add(acc, _mul(G[i, c], G[j, c], exp, log, qm1), exp, log, zech, qm1)
            out[i, j] = acc
            out[j, i] = acc
    return out


@njit(cache=True)
def rref(M, exp, log, zech, qm1):
    """Reduced row echelon form in place; returns the pivot columns."""
    rows, cols = M.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = M[piv, j]
                M[piv, j] = M[rank, j]
                M[rank, j] = tmp
        scale = _inv(M[rank, c], exp, log, qm1)
        for j in range(c, cols):
            M[rank, j] = _mul(M[rank, j], scale, exp, log, qm1)
        for i in range(rows):
            if i != rank and M[i, c] != 0:
                f = _neg(M[i, c], exp, log, qm1)
                for j in range(c, cols):
                    if M[rank, j] != 0:
                        M[i, j] = _add(M[i, j], _mul(f, M[rank, j], exp, log, qm1),
                                       exp, log, zech, qm1)
        pivots[rank] = c
        rank += 1
    return pivots[:rank]


@njit(cache=True)
def _nonsingular(A, exp, log, zech, qm1):
    """Forward elimination on a square scratch matrix; True iff full rank."""
    n = A.shape[0]
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            return False
        if piv != c:
            for j in range(c, n):
                tmp = A[piv, j]
                A[piv, j] = A[c, j]
                A[c, j] = tmp
        f0 = _neg(_inv(A[c, c], exp, log, qm1), exp, log, qm1)
        for i in range(c + 1, n):
            if A[i, c] != 0:
                f = _mul(A[i, c], f0, exp, log, qm1)
                for j in range(c + 1, n):
                    if A[c, j] != 0:
                        A[i, j] = _add(A[i, j], _mul(f, A[c, j], exp, log, qm1),
                                       exp, log, zech, qm1)
    return True


@njit(cache=True)
def subsets_nonsingular(R, is_pivot, pivot_row, subsets, exp, log, zech, qm1):
    """For each k-subset of columns of a k x N RREF matrix R, whether it is independent.

    The subset S is independent iff the square submatrix of R with rows
    {pivot rows whose pivot column is not in S} and columns {non-pivot
    columns in S} is nonsingular.
    """
    count, k = subsets.shape
    ok = np.zeros(count, dtype=np.bool_)
    rows = np.empty(k, dtype=np.int64)
    cols = np.empty(k, dtype=np.int64)
    scratch = np.empty((k, k), dtype=np.int64)
    in_s = np.zeros(R.shape[0] + 1, dtype=np.bool_)
    for idx in range(count):
        for i in range(R.shape[0]):
            in_s[i] = False
        nc = 0
        for j in range(k):
            col = subsets[idx, j]
            if is_pivot[col]:
                in_s[pivot_row[col]] = True
            else:
                cols[nc] = col
                nc += 1
        nr = 0
        for i in range(R.shape[0]):
            if not in_s[i]:
                rows[nr] = i
                nr += 1
        if nr != nc:
            ok[idx] = False
            continue
        if nr == 0:
            ok[idx] = True
            continue
        A = scratch[:nr, :nr]
        for a in range(nr):
            for b in range(nr):
                A[a, b] = R[rows[a], cols[b]]
        ok[idx] = _nonsingular(A, exp, log, zech, qm1)
    return ok
