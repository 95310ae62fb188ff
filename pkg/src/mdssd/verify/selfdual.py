from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..gf import FieldCtx
from . import linalg


@dataclass(frozen=True)
class SelfDualResult:
    """Verdict plus the facts it rests on.

    ``first_nonzero`` is the lexicographically first (i, j) with a nonzero
    inner product of rows i and j, or None when G @ G.T vanishes.
    """

    ok: bool
    rank: int
    k: int
    ncols: int
    first_nonzero: tuple[int, int] | None
    value: int | None = None

    def __bool__(self):
        return self.ok

    def message(self) -> str:
        if self.ok:
            return f"self-dual: G.G^T = 0 and rank {self.rank} = {self.ncols}/2"
        parts = []
        if self.first_nonzero is not None:
            i, j = self.first_nonzero
            parts.append(f"rows {i} and {j} have inner product {self.value} != 0")
        if 2 * self.rank != self.ncols:
            parts.append(f"rank {self.rank} != {self.ncols}/2")
        return "not self-dual: " + "; ".join(parts)

    def as_dict(self) -> dict:
        return {"self_dual": self.ok, "rank": self.rank, "k": self.k, "ncols": self.ncols,
                "first_nonzero": list(self.first_nonzero) if self.first_nonzero else None,
                "value": self.value}


def _rows(G) -> np.ndarray:
    return linalg.as_array(getattr(G, "rows", G))


def is_self_dual(ctx: FieldCtx, G) -> SelfDualResult:
    """True iff G @ G.T = 0 and rank(G) = ncols / 2.

    ``G`` is a :class:`~mdssd.grscodes.GeneratorMatrix` or any k x N array.
    """
    M = _rows(G)
    k, n = M.shape
    gm = linalg.gram(ctx, M)
    nz = np.argwhere(gm != 0)
    first = value = None
    if len(nz):
        i, j = (int(x) for x in nz[0])
        first, value = (i, j), int(gm[i, j])
    rk = linalg.rank(ctx, M)
    return SelfDualResult(first is None and 2 * rk == n, rk, k, n, first, value)
