"""delta/pi quantities, the multipliers v, and (extended) GRS generator matrices.

A GRS code GRS_k(a, v) is spanned by the rows (v_j a_j^i)_j, i < k.  It is
Euclidean self-dual when n = 2k and v_j^2 delta_A(a_j) is one constant
(a square times lambda); the extended code GRS_k(a, v, inf) needs
v_j^2 delta_A(a_j) = -1 and appends the coefficient of x^(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .evalsets import (FAMILIES, TRACE_THEOREMS, Block, ConditionReport, CosetParams, EvalSet,
                       ParameterError, build_symdiff_mult, build_symdiff_trace_subspace,
                       build_union_trace_subspace, preset, trace_problems)
from .evalsets.multiplicative import check_generic_conditions
from .gf import FieldCtx
from .verify import SelfDualResult, is_self_dual


class ConstructionError(ValueError):
    """A set or multiplier vector does not meet the self-duality preconditions."""


# -- pi and delta ---------------------------------------------------------------

def pi_eval(ctx: FieldCtx, points, x: int) -> int:
    """prod_{e in points} (x - e); zero exactly when x is a point."""
    out = 1
    for e in points:
        out = ctx.mul(out, ctx.sub(x, e))
        if out == 0:
            return 0
    return out


def _block_pi(ctx: FieldCtx, block: Block, x: int) -> int:
    if block.kind == "trace":
        return ctx.sub(ctx.trace(x), block.level)
    if block.kind == "multiplicative":
        return ctx.sub(ctx.pow(x, block.order), block.shift)
    return pi_eval(ctx, block.elements, x)


def _block_delta(ctx: FieldCtx, block: Block, x: int) -> int:
    if block.kind == "trace":
        return 1  # d/dx (x + x^r - h) = 1 in characteristic p
    if block.kind == "multiplicative":
        return ctx.mul(ctx.scalar(block.order), ctx.pow(x, block.order - 1))
    return ctx.prod(ctx.sub(x, e) for e in block.elements if e != x)


def _union_delta(ctx: FieldCtx, blocks, a: int) -> int:
    out = None
    rest = 1
    for b in blocks:
        if out is None and a in b.elements:
            out = _block_delta(ctx, b, a)
        else:
            rest = ctx.mul(rest, _block_pi(ctx, b, a))
    if out is None:
        raise ValueError(f"{a} is not in any block")
    return ctx.mul(out, rest)


def delta_direct(ctx: FieldCtx, points, a: int) -> int:
    return ctx.prod(ctx.sub(a, e) for e in points if e != a)


def delta(ctx: FieldCtx, S: EvalSet, a: int, mode: str = "structured") -> int:
    """delta_S(a) = prod_{e in S, e != a} (a - e).

    ``mode="structured"`` uses the block decomposition recorded in ``S``:
    for a union, delta of the own block times pi of the others; for a
    symmetric difference A ^ B, delta_A(a) pi_B(a) / pi_{A n B}(a)^2 on the
    A side and symmetrically on the B side.
    """
    if a not in S:
        raise ValueError(f"{a} is not an evaluation point of {S.provenance}")
    if mode == "direct" or not S.blocks_a:
        return delta_direct(ctx, S.elements, a)
    if mode != "structured":
        raise ValueError(f"mode must be 'direct' or 'structured', not {mode!r}")
    if S.combine == "union":
        return _union_delta(ctx, S.blocks_a, a)
    common = _intersection(S)
    own, other = (S.blocks_a, S.blocks_b) if any(a in b.elements for b in S.blocks_a) \
        else (S.blocks_b, S.blocks_a)
    num = ctx.mul(_union_delta(ctx, own, a), ctx.prod(_block_pi(ctx, b, a) for b in other))
    den = pi_eval(ctx, common, a)
    return ctx.div(num, ctx.mul(den, den))


def _intersection(S: EvalSet) -> tuple[int, ...]:
    cached = S.__dict__.get("_intersection_cache")
    if cached is None:
        cached = tuple(sorted(S.set_a & S.set_b))
        object.__setattr__(S, "_intersection_cache", cached)
    return cached


def deltas(ctx: FieldCtx, S: EvalSet, mode: str = "structured") -> list[int]:
    """delta_S(a) for every point, in set order."""
    return [delta(ctx, S, a, mode) for a in S.elements]


# -- multipliers and matrices ------------------------------------------------------

@dataclass(frozen=True)
class CoeffVector:
    """Multipliers v and the witness lambda.

    Plain: v_i^2 delta(a_i) = lam for all i.  Extended: v_i^2 delta(a_i) = -1
    and ``lam`` is 1.
    """

    v: tuple[int, ...]
    lam: int
    extended: bool

    def __len__(self):
        return len(self.v)


def coefficient_vector(ctx: FieldCtx, S: EvalSet, extended: bool | None = None,
                       mode: str = "structured", ds: list[int] | None = None) -> CoeffVector:
    """Multipliers for a self-dual (extended) GRS code on ``S``.

    ``extended`` defaults to the parity of |S|.  The character profile is
    checked point by point and the first offending point is reported.
    """
    n = len(S)
    if extended is None:
        extended = n % 2 == 1
    if ds is None:
        ds = deltas(ctx, S, mode)
    if extended:
        if n % 2 == 0:
            raise ConstructionError(f"extended code needs an odd number of points, got {n}")
        for a, d in zip(S.elements, ds):
            if ctx.eta(ctx.neg(d)) != 1:
                raise ConstructionError(f"eta(-delta({a})) = -1 in {S.provenance}")
        v = tuple(ctx.sqrt(ctx.neg(ctx.inv(d))) for d in ds)
        return CoeffVector(v, 1, True)
    if n % 2:
        raise ConstructionError(f"plain code needs an even number of points, got {n}")
    if n == 0:
        return CoeffVector((), 1, False)
    chi0 = ctx.eta(ds[0])
    for a, d in zip(S.elements, ds):
        if ctx.eta(d) != chi0:
            raise ConstructionError(f"eta(delta({a})) = {-chi0} but eta(delta({S.elements[0]})) "
                                    f"= {chi0} in {S.provenance}")
    lam = 1 if chi0 == 1 else ctx.omega
    v = tuple(ctx.sqrt(ctx.div(lam, d)) for d in ds)
    return CoeffVector(v, lam, False)


@dataclass(frozen=True)
class GeneratorMatrix:
    k: int
    ncols: int
    rows: np.ndarray = field(compare=False)
    extended: bool
    ctx_fingerprint: tuple

    def __post_init__(self):
        self.rows.setflags(write=False)
        if self.rows.shape != (self.k, self.ncols):
            raise ValueError(f"rows have shape {self.rows.shape}, expected ({self.k}, {self.ncols})")

    def __eq__(self, other):
        return (isinstance(other, GeneratorMatrix)
                and (self.k, self.ncols, self.extended, self.ctx_fingerprint)
                == (other.k, other.ncols, other.extended, other.ctx_fingerprint)
                and np.array_equal(self.rows, other.rows))

    __hash__ = None


def generator_matrix(ctx: FieldCtx, S: EvalSet | tuple, coeffs: CoeffVector) -> GeneratorMatrix:
    """Rows v_j a_j^i for i < k, plus the indicator column of row k-1 when extended."""
    points = tuple(S)
    n = len(points)
    if len(coeffs) != n:
        raise ValueError(f"{len(coeffs)} multipliers for {n} points")
    if coeffs.extended:
        k, N = (n + 1) // 2, n + 1
    else:
        k, N = n // 2, n
    rows = np.zeros((k, N), dtype=np.int64)
    cur = list(coeffs.v)
    for i in range(k):
        rows[i, :n] = cur
        cur = [ctx.mul(c, a) for c, a in zip(cur, points)]
    if coeffs.extended:
        rows[k - 1, n] = 1
    return GeneratorMatrix(k, N, rows, coeffs.extended, ctx.fingerprint)


# -- end to end -----------------------------------------------------------------------

@dataclass(frozen=True)
class Code:
    evalset: EvalSet
    coeffs: CoeffVector
    matrix: GeneratorMatrix
    theorem: int
    variant: str | None
    report: ConditionReport | None
    selfdual: SelfDualResult
    deltas: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def length(self) -> int:
        return self.matrix.ncols

    @property
    def dimension(self) -> int:
        return self.matrix.k


def theorem_number(theorem) -> int:
    if isinstance(theorem, str):
        theorem = theorem.lower().removeprefix("thm")
        if not theorem.isdigit():
            raise ParameterError(f"unknown theorem id {theorem!r}")
    theorem = int(theorem)
    if not 1 <= theorem <= 16:
        raise ParameterError(f"unknown theorem id thm{theorem}; expected thm1..thm16")
    return theorem


def build_evalset(ctx: FieldCtx, theorem, *, s: int, t: int, variant: str | None = None,
                  mu: int | None = None, nu: int | None = None,
                  force: bool = False) -> tuple[EvalSet, ConditionReport | None, str | None]:
    """The evaluation set of one theorem instance, with its condition report if any."""
    th = theorem_number(theorem)
    if th in TRACE_THEOREMS:
        if not force:
            bad = trace_problems(th, ctx.p, ctx.m, t, s)
            if bad:
                raise ParameterError(f"thm{th}: " + "; ".join(bad))
        parity, symdiff, _ = TRACE_THEOREMS[th]
        build = build_symdiff_trace_subspace if symdiff else build_union_trace_subspace
        return build(ctx, t, s, force=force), None, None
    if th in (5, 6, 7):
        if mu is None or nu is None:
            raise ParameterError(f"thm{th} needs mu and nu")
        params = CosetParams(mu, nu, s, t)
        report = check_generic_conditions(ctx, params, th)
        return build_symdiff_mult(ctx, params, th, force=force), report, None
    variant = variant or "n"
    res = preset(th, ctx, s, t, variant, strict=not force)
    generic = {"n": 5, "n1": 6, "n2": 7}[variant]
    S = build_symdiff_mult(ctx, res.params, generic, force=force,
                           provenance=f"thm{th}{variant}(s={s},t={t})")
    if len(S) + len(S) % 2 != res.length:
        raise AssertionError(f"thm{th} {variant}: built length {len(S) + len(S) % 2}, "
                             f"cardinality formula {res.length}")
    return S, res.report, variant


def build_code(ctx: FieldCtx, theorem, *, s: int, t: int, variant: str | None = None,
               mu: int | None = None, nu: int | None = None, force: bool = False,
               mode: str = "structured") -> Code:
    """Evaluation set, multipliers and generator matrix for one theorem instance.

    The matrix must pass :func:`~mdssd.verify.is_self_dual` before it is
    returned, so a mistaken multiplier recipe can never leak out.
    """
    th = theorem_number(theorem)
    S, report, variant = build_evalset(ctx, th, s=s, t=t, variant=variant, mu=mu, nu=nu,
                                       force=force)
    ds = deltas(ctx, S, mode)
    try:
        coeffs = coefficient_vector(ctx, S, ds=ds)
    except ConstructionError as exc:
        raise ConstructionError(f"thm{th}(s={s}, t={t}): {exc}") from exc
    G = generator_matrix(ctx, S, coeffs)
    sd = is_self_dual(ctx, G)
    if not sd.ok:
        raise ConstructionError(f"thm{th}(s={s}, t={t}): {sd.message()}")
    return Code(S, coeffs, G, th, variant, report, sd, tuple(ds))


__all__ = ["ConstructionError", "pi_eval", "delta", "delta_direct", "deltas", "CoeffVector",
           "coefficient_vector", "GeneratorMatrix", "generator_matrix", "Code", "build_evalset",
           "build_code", "theorem_number", "FAMILIES"]
