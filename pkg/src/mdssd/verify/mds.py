"""MDS check: every k columns of a rank-k generator matrix are independent."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb

import numpy as np

from ..gf import FieldCtx
from . import linalg

DEFAULT_CAP = 2_000_000
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0
MAX_RECORDED = 1000
_CHUNK = 65_536


class RankError(ValueError):
    """The matrix does not have full row rank."""


@dataclass(frozen=True)
class MdsReport:
    mode: str
    checked: int
    failures: tuple[tuple[int, ...], ...]
    cap: int
    seed: int | None = None
    samples: int | None = None
    failure_count: int = 0
    zero_columns: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def __bool__(self):
        return self.ok

    @property
    def guarantee(self) -> str:
        if self.mode == "exhaustive":
            return "every k-column subset checked"
        return "seeded sample only; MDS for distinct evaluation points is a theorem about GRS codes"

    def as_dict(self) -> dict:
        return {"mds": self.ok, "mode": self.mode, "checked": self.checked, "cap": self.cap,
                "seed": self.seed, "samples": self.samples, "failure_count": self.failure_count,
                "failures": [list(f) for f in self.failures],
                "zero_columns": list(self.zero_columns), "guarantee": self.guarantee}


def sample_subsets(n: int, k: int, samples: int, seed: int) -> np.ndarray:
    """``samples`` sorted k-subsets of range(n) from numpy's PCG64 seeded with ``seed``."""
    rng = np.random.default_rng(seed)
    out = np.empty((samples, k), dtype=np.int64)
    for start in range(0, samples, _CHUNK):
        stop = min(samples, start + _CHUNK)
        keys = rng.random((stop - start, n))
        out[start:stop] = np.sort(np.argsort(keys, axis=1)[:, :k], axis=1)
    return out


def _chunks_exhaustive(n: int, k: int):
    it = combinations(range(n), k)
    while True:
        block = list(islice(it, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


def _chunks_sampled(n, k, samples, seed):
    subs = sample_subsets(n, k, samples, seed)
    for start in range(0, samples, _CHUNK):
        yield subs[start:start + _CHUNK]


def is_mds(ctx: FieldCtx, G, cap: int = DEFAULT_CAP, samples: int = DEFAULT_SAMPLES,
           seed: int = DEFAULT_SEED) -> MdsReport:
    """Check k-column subsets of ``G`` for independence.

    Exhaustive when C(N, k) <= ``cap``, otherwise ``samples`` seeded random
    subsets.  The matrix is reduced to RREF once; each subset then costs one
    small determinant.
    """
    M = linalg.as_array(getattr(G, "rows", G))
    k, n = M.shape
    R, pivots = linalg.rref(ctx, M)
    if len(pivots) != k:
        raise RankError(f"rank {len(pivots)} < k={k}; the MDS check needs full row rank")
    zero_cols = tuple(int(j) for j in np.flatnonzero(~M.any(axis=0)))
    total = comb(n, k)
    if total <= cap:
        mode, chunks, seed_used, samples_used = "exhaustive", _chunks_exhaustive(n, k), None, None
    else:
        mode, chunks = "sampled", _chunks_sampled(n, k, samples, seed)
        seed_used, samples_used = seed, samples
    checked, count, failures = 0, 0, []
    for subs in chunks:
        ok = linalg.subsets_nonsingular(ctx, R, pivots, subs)
        checked += len(subs)
        bad = np.flatnonzero(~ok)
        count += len(bad)
        for idx in bad[:max(0, MAX_RECORDED - len(failures))]:
            failures.append(tuple(int(c) for c in subs[idx]))
    if mode == "sampled":
        failures = sorted(set(failures))
    return MdsReport(mode, checked, tuple(failures), cap, seed_used, samples_used, count,
                     zero_cols)
