"""Exact linear algebra over GF(q).

Fields with discrete-log tables go through the compiled kernels; larger
fields fall back to plain Python on top of :class:`~mdssd.gf.FieldCtx`.
"""

from __future__ import annotations

import numpy as np

from ..gf import FieldCtx
from . import _kernels


def _tables(ctx: FieldCtx):
    return ctx.exp_table, ctx.log_table, ctx.zech_table, ctx.order


def as_array(M) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(M, dtype=np.int64))


def gram(ctx: FieldCtx, G) -> np.ndarray:
    """G @ G.T."""
    G = as_array(G)
    if ctx.has_tables:
        return _kernels.gram(G, *_tables(ctx))
    k, n = G.shape
    rows = G.tolist()
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i, k):
            acc = 0
            for a, b in zip(rows[i], rows[j]):
                if a and b:
                    acc = ctx.add(acc, ctx.mul(a, b))
            out[i, j] = out[j, i] = acc
    return out


def rref(ctx: FieldCtx, M) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns; the input is not modified."""
    R = as_array(M).copy()
    if ctx.has_tables:
        piv = _kernels.rref(R, *_tables(ctx))
        return R, tuple(int(c) for c in piv)
    rows, cols = R.shape
    A = R.tolist()
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = next((i for i in range(rank, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        s = ctx.inv(A[rank][c])
        A[rank] = [ctx.mul(x, s) for x in A[rank]]
        for i in range(rows):
            if i != rank and A[i][c]:
                f = ctx.neg(A[i][c])
                A[i] = [ctx.add(x, ctx.mul(f, y)) if y else x for x, y in zip(A[i], A[rank])]
        pivots.append(c)
        rank += 1
    return np.array(A, dtype=np.int64).reshape(rows, cols), tuple(pivots)


def rank(ctx: FieldCtx, M) -> int:
    return len(rref(ctx, M)[1])


def subsets_nonsingular(ctx: FieldCtx, R: np.ndarray, pivots, subsets: np.ndarray) -> np.ndarray:
    """Independence of each listed k-subset of columns, given the RREF ``R`` of a rank-k matrix."""
    k, n = R.shape
    is_pivot = np.zeros(n, dtype=np.bool_)
    pivot_row = np.full(n, -1, dtype=np.int64)
    for i, c in enumerate(pivots):
        is_pivot[c] = True
        pivot_row[c] = i
    subsets = np.ascontiguousarray(subsets, dtype=np.int64)
    if ctx.has_tables:
        return _kernels.subsets_nonsingular(R, is_pivot, pivot_row, subsets, *_tables(ctx))
    out = np.zeros(len(subsets), dtype=np.bool_)
    for idx, S in enumerate(subsets.tolist()):
        out[idx] = rank(ctx, R[:, S]) == k
    return out
